"""Register balancing for gadget-masked hardware circuits.

A C-like source with ``reg(...)`` annotations (or an unmasked circuit plus
a gadget choice) is turned into a timing model, retimed by solving a system
of difference constraints, and emitted as a balanced pipeline with the
fewest extra registers.
"""

__version__ = "0.1.0"

from .dfg import Dfg, Kind, validate_dfg
from .errors import ConstraintViolation, MaskpipeError, NegativeCycle, ParseError, ValidationError
from .frontend import load_dfg, parse_json_netlist, parse_masked_c
from .gadgets import GadgetKind, apply_masking_pass
from .hlsmodel import build_hls_model, max_extra_regs
from .netlist import PipelinedNetlist
from .retimer import apply_retiming, compute_wd, gen_constraints, retime, solve_constraints
from .simcheck import check_balance, check_equivalence, naive_balance, simulate
from .codegen import emit_balanced_source, emit_verilog

__all__ = [
    "Dfg", "Kind", "validate_dfg", "MaskpipeError", "ParseError", "ValidationError", "NegativeCycle",
    "ConstraintViolation", "parse_masked_c", "parse_json_netlist", "load_dfg", "GadgetKind",
    "apply_masking_pass", "build_hls_model", "max_extra_regs", "PipelinedNetlist", "compute_wd",
    "gen_constraints", "solve_constraints", "apply_retiming", "retime", "simulate", "check_equivalence",
    "check_balance", "naive_balance", "emit_balanced_source", "emit_verilog",
]
