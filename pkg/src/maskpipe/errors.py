"""Exception types shared by the compiler stages."""

from __future__ import annotations


class MaskpipeError(Exception):
    """Base class for all compiler errors."""


class ParseError(MaskpipeError):
    """Raised for malformed or unsupported source text.

    ``line`` and ``col`` are 1-based and point at the offending token.
    """

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line else ""
        super().__init__(f"{where}{message}")


class ValidationError(MaskpipeError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        text = "; ".join(str(d) for d in self.diagnostics)
        super().__init__(f"invalid dataflow graph: {text}")


class NegativeCycle(MaskpipeError):
    """The difference-constraint graph has a negative cycle.

    Models built by :func:`maskpipe.hlsmodel.build_hls_model` never produce
    one, so seeing this means a construction bug upstream.
    """

    def __init__(self, message: str, cycle=None):
        self.cycle = cycle
        super().__init__(message)


class ConstraintViolation(MaskpipeError):
    """A retiming label vector breaks a constraint it was supposed to satisfy."""
