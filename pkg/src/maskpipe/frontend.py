"""Parser for the straight-line masked-C dialect and the JSON netlist format.

The accepted source is a single function over 1-bit ``bool`` wires::

    int domand(bool a0, bool a1, bool b0, bool b1, bool z, bool *y0, bool *y1)
    {
        p2 = a0 * b1;
        i1 = reg(p2 ^ z);
        ...
        return 0;
    }

``&`` and ``*`` are both AND, ``^`` is XOR, ``~`` is NOT and ``reg(e)`` marks
the root of ``e`` as needing a register after it.  Parsing is structure
preserving: every operator occurrence becomes one node, nothing is folded or
shared.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from .dfg import GATES, Dfg, Kind, validate_dfg
from .errors import ParseError, ValidationError

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<num>[0-9]+)
  | (?P<op>[(){};,=^&*~])
  | (?P<bad>.)
""", re.VERBOSE | re.DOTALL)

_TYPES = {"int", "bool", "void"}
_CONTROL = {"if", "else", "for", "while", "do", "switch", "case", "goto", "break",
            "continue", "struct", "typedef", "union", "enum", "sizeof", "static",
            "const", "unsigned", "char", "long", "short"}
_UNSUPPORTED_CHARS = set("[]|+-!<>?:%/#.\"'")


@dataclass
class SourceProgram:
    text: str
    name: str | None = None


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


# expression tree: tuples tagged by their first element
#   ("id", name, pos) ("const", 0|1, pos) ("not", e, pos) ("reg", e, pos)
#   ("and", l, r, pos) ("xor", l, r, pos)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = self._lex(text)
        self.i = 0

    def _where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.peek().pos
        return ParseError(msg, *self._where(pos))

    def _lex(self, text: str) -> list[_Tok]:
        out = []
        for m in _TOKEN.finditer(text):
            kind = m.lastgroup
            if kind in ("ws", "comment"):
                continue
            s = m.group()
            if kind == "bad":
                where = self._where(m.start())
                if text.startswith("/*", m.start()):
                    raise ParseError("unterminated comment", *where)
                if s == "#":
                    raise ParseError("unsupported construct: preprocessor directive", *where)
                if s in _UNSUPPORTED_CHARS:
                    raise ParseError(f"unsupported construct: operator {s!r}", *where)
                raise ParseError(f"unexpected character {s!r}", *where)
            out.append(_Tok(kind, s, m.start()))
        out.append(_Tok("eof", "", len(text)))
        return out

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text or t.kind == "eof":
            raise self.error(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return self.take()

    def ident(self, what: str = "identifier") -> _Tok:
        t = self.peek()
        if t.kind != "ident":
            raise self.error(f"expected {what}, found {t.text or 'end of input'!r}")
        self._reject_keyword(t)
        return self.take()

    def _reject_keyword(self, t: _Tok) -> None:
        if t.text in _CONTROL:
            raise self.error(f"unsupported construct: {t.text!r}", t.pos)

    # -- grammar ----------------------------------------------------------

    def function(self):
        t = self.peek()
        self._reject_keyword(t)
        if t.text not in _TYPES:
            raise self.error("expected function return type")
        self.take()
        name = self.ident("function name").text
        self.expect("(")
        params = []
        if self.peek().text != ")":
            while True:
                params.append(self.param())
                if self.peek().text == ",":
                    self.take()
                    continue
                break
        self.expect(")")
        self.expect("{")
        stmts = []
        saw_return = False
        while self.peek().text != "}":
            if self.peek().kind == "eof":
                raise self.error("unexpected end of input, missing '}'")
            if self.peek().text == "return":
                self.take()
                t = self.peek()
                if t.text != "0":
                    raise self.error("only 'return 0;' is supported")
                self.take()
                self.expect(";")
                saw_return = True
                if self.peek().text != "}":
                    raise self.error("statements after return")
                continue
            stmts.append(self.statement())
        self.expect("}")
        if self.peek().kind != "eof":
            t = self.peek()
            if t.kind == "ident" and t.text in _TYPES:
                raise self.error("unsupported construct: more than one function", t.pos)
            raise self.error(f"unexpected {t.text!r} after function body")
        if not saw_return:
            log.debug("function %s has no 'return 0;'", name)
        return name, params, stmts

    def param(self):
        t = self.peek()
        if t.text != "bool":
            if t.kind == "ident" and t.text not in _CONTROL:
                raise self.error(f"unsupported parameter type {t.text!r}; only bool wires are allowed")
            raise self.error("expected parameter")
        self.take()
        ptr = False
        if self.peek().text == "*":
            self.take()
            ptr = True
        name = self.ident("parameter name")
        if self.peek().text == "[":
            raise self.error("unsupported construct: array parameter")
        return name.text, ptr, name.pos

    def statement(self):
        t = self.peek()
        self._reject_keyword(t)
        if t.text == "bool":
            self.take()
        deref = False
        if self.peek().text == "*":
            self.take()
            deref = True
        lhs = self.ident("assignment target")
        if self.peek().text == "(":
            raise self.error(f"unsupported construct: call to {lhs.text!r}", lhs.pos)
        self.expect("=")
        e = self.expr()
        self.expect(";")
        return lhs.text, deref, e, lhs.pos

    def expr(self):
        left = self.term()
        while self.peek().text == "^":
            pos = self.take().pos
            left = ("xor", left, self.term(), pos)
        return left

    def term(self):
        left = self.factor()
        while self.peek().text in ("&", "*"):
            pos = self.take().pos
            left = ("and", left, self.factor(), pos)
        return left

    def factor(self):
        t = self.peek()
        if t.text == "~":
            self.take()
            return ("not", self.factor(), t.pos)
        if t.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if t.text == "*":
            # pointer read, e.g. ``*i1``
            self.take()
            name = self.ident()
            return ("id", name.text, name.pos)
        if t.kind == "num":
            self.take()
            if t.text not in ("0", "1"):
                raise self.error("unsupported construct: integer literal other than 0/1", t.pos)
            return ("const", int(t.text), t.pos)
        if t.kind == "ident":
            self._reject_keyword(t)
            if t.text == "reg":
                self.take()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                if inner[0] == "reg":
                    raise self.error("nested reg(reg(...)) is not allowed", t.pos)
                if inner[0] == "const":
                    raise self.error("reg() of a constant is not allowed", t.pos)
                return ("reg", inner, t.pos)
            self.take()
            if self.peek().text == "(":
                raise self.error(f"unsupported construct: call to {t.text!r}", t.pos)
            return ("id", t.text, t.pos)
        raise self.error(f"unexpected {t.text or 'end of input'!r}")


def _reads(e, acc: set[str]) -> None:
    tag = e[0]
    if tag == "id":
        acc.add(e[1])
    elif tag in ("not", "reg"):
        _reads(e[1], acc)
    elif tag in ("and", "xor"):
        _reads(e[1], acc)
        _reads(e[2], acc)


def parse_masked_c(program: SourceProgram | str) -> Dfg:
    """Parse masked-C text into a :class:`Dfg`.

    Pointer parameters that are read inside the body are internal wires;
    the other pointer parameters are outputs, in declaration order.  Scalar
    parameters that are never read are dropped.
    """
    if isinstance(program, str):
        program = SourceProgram(program)
    p = _Parser(program.text)
    fname, params, stmts = p.function()

    seen: dict[str, int] = {}
    for name, _, pos in params:
        if name in seen:
            raise p.error(f"duplicate parameter {name!r}", pos)
        seen[name] = pos
    read: set[str] = set()
    for _, _, e, _ in stmts:
        _reads(e, read)

    g = Dfg(program.name or fname)
    env: dict[str, int] = {}
    inputs = {n for n, ptr, _ in params if not ptr}
    outputs = [n for n, ptr, _ in params if ptr and n not in read]
    for name, ptr, _ in params:
        if ptr:
            continue
        if name in read:
            env[name] = g.add_input(name)
        else:
            log.warning("input %r is never used and is dropped", name)

    def build(e) -> int:
        tag = e[0]
        if tag == "id":
            if e[1] not in env:
                raise p.error(f"use of undefined wire {e[1]!r}", e[2])
            return env[e[1]]
        if tag == "const":
            return g.add_const(e[1])
        if tag == "not":
            return g.add_gate(Kind.NOT, build(e[1]))
        if tag == "and":
            a = build(e[1])
            return g.add_gate(Kind.AND, a, build(e[2]))
        if tag == "xor":
            a = build(e[1])
            return g.add_gate(Kind.XOR, a, build(e[2]))
        if tag == "reg":
            inner = e[1]
            if inner[0] == "id":
                return g.add_gate(Kind.BUF, build(inner), annotated=True)
            nid = build(inner)
            g.nodes[nid].annotated = True
            return nid
        raise AssertionError(tag)

    assigned: set[str] = set()
    for lhs, _, e, pos in stmts:
        if lhs in inputs:
            raise p.error(f"assignment to input {lhs!r}", pos)
        if lhs in assigned:
            raise p.error(f"multiple assignment to {lhs!r}", pos)
        before = g.next_id if g.nodes else 0
        nid = build(e)
        node = g.nodes[nid]
        if nid >= before and node.name is None and node.kind in GATES:
            node.name = lhs
        env[lhs] = nid
        assigned.add(lhs)

    for name in outputs:
        if name not in env:
            raise p.error(f"output {name!r} is never assigned", seen[name])
        g.add_output(name, env[name])
    return g


def parse_json_netlist(text: str | dict) -> Dfg:
    """Load the JSON netlist interchange format."""
    try:
        return Dfg.from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad JSON netlist: {e}") from None


def load_dfg(path: str | Path, fmt: str | None = None, validate: bool = True) -> Dfg:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "c"
    g = parse_json_netlist(text) if fmt == "json" else parse_masked_c(SourceProgram(text))
    if validate:
        diags = validate_dfg(g)
        if diags:
            raise ValidationError(diags)
    return g
