"""End-to-end compilation: parse, mask, model, retime, emit, check."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path

from .codegen import emit_balanced_source, emit_verilog
from .dfg import Dfg, validate_dfg
from .errors import ValidationError
from .frontend import load_dfg
from .gadgets import GadgetKind, apply_masking_pass
from .netlist import PipelinedNetlist
from .retimer import RetimeResult, retime
from .simcheck import check_balance, check_equivalence, check_recombination, naive_balance, savings

log = logging.getLogger(__name__)

REPORT_SCHEMA = "maskpipe-report"
REPORT_VERSION = 1


@dataclass
class CompileConfig:
    input: Path
    fmt: str | None = None
    gadget: GadgetKind | None = None
    share_randoms: bool = False
    clock: float = 1.0
    emit_verilog: Path | None = None
    emit_source: Path | None = None
    report: Path | None = None
    dump_constraints: Path | None = None
    dump_model: Path | None = None
    naive: bool = False
    check: bool = False
    trials: int = 10_000
    seed: int = 0
    module_name: str | None = None
    runtime_in_report: bool = True


@dataclass
class CompileResult:
    golden: Dfg
    netlist: PipelinedNetlist
    retimed: RetimeResult | None
    naive: PipelinedNetlist
    report: dict = field(default_factory=dict)
    unmasked: Dfg | None = None


def _round(x: float) -> float:
    return round(x, 2)


def build_report(golden: Dfg, net: PipelinedNetlist, naive: PipelinedNetlist, mode: str) -> dict:
    ann = net.annotated_count()
    total = net.register_count()
    return {
        "schema": REPORT_SCHEMA,
        "version": REPORT_VERSION,
        "circuit": golden.name,
        "mode": mode,
        "gadget": golden.meta.get("masking", {}).get("kind"),
        "gates": golden.gate_count(),
        "ann_regs": ann,
        "bal_regs": total - ann,
        "total_regs": total,
        "registers": total,
        "latency": net.latency,
        "naive_registers": naive.register_count(),
        "naive_latency": naive.latency,
        "savings_regs_pct": _round(savings(naive.register_count(), total)),
        "savings_latency_pct": _round(savings(naive.latency, net.latency)),
    }


def compile_dfg(g: Dfg, naive_mode: bool = False, clock: float = 1.0) -> CompileResult:
    """Balance an already loaded (and, if wanted, masked) circuit."""
    naive = naive_balance(g)
    if naive_mode:
        res, net = None, naive
    else:
        res = retime(g, clock)
        net = res.netlist
    rep = build_report(g, net, naive, "naive" if naive_mode else "balance")
    return CompileResult(g, net, res, naive, rep)


def load_input(cfg: CompileConfig) -> tuple[Dfg, Dfg | None]:
    """(circuit to balance, unmasked original when the masking pass ran)."""
    g = load_dfg(cfg.input, cfg.fmt)
    if cfg.gadget is None:
        return g, None
    if g.annotated_nodes():
        raise ValidationError([f"--gadget needs an annotation-free input, found "
                               f"{len(g.annotated_nodes())} reg(...) annotations"])
    masked = apply_masking_pass(g, cfg.gadget, cfg.share_randoms)
    diags = validate_dfg(masked)
    if diags:
        raise ValidationError(diags)
    return masked, g


def run(cfg: CompileConfig) -> CompileResult:
    """Run the whole flow and write every requested artifact.

    Checking failures are recorded in the report; the caller decides what to
    do with them.
    """
    t0 = time.perf_counter()
    g, unmasked = load_input(cfg)
    out = compile_dfg(g, cfg.naive, cfg.clock)
    out.unmasked = unmasked
    rep = out.report
    elapsed = time.perf_counter() - t0
    if cfg.runtime_in_report:
        rep["runtime_s"] = round(elapsed, 4)
    log.info("%s: %d registers (%d annotated), latency %d, %.3f s", g.name, rep["total_regs"],
             rep["ann_regs"], rep["latency"], elapsed)

    if cfg.check:
        bal = check_balance(out.netlist)
        eq = check_equivalence(out.netlist, g, cfg.trials, cfg.seed)
        rep["balanced"] = bal.balanced
        if bal.witness:
            rep["balance_witness"] = bal.witness
        rep["equivalent"] = eq.equivalent
        rep["trials"] = eq.trials
        rep["exhaustive"] = eq.exhaustive
        rep["seed"] = cfg.seed
        rep["mismatch_count"] = eq.mismatch_count
        rep["mismatches"] = eq.mismatches
        if unmasked is not None:
            rc = check_recombination(g, unmasked, max(cfg.trials, 100_000), cfg.seed)
            rep["recombination"] = {"correct": rc.correct, "trials": rc.trials,
                                    "exhaustive": rc.exhaustive, "failures": rc.failures}

    module = cfg.module_name or g.name
    if cfg.emit_verilog:
        Path(cfg.emit_verilog).write_text(emit_verilog(out.netlist, module))
    if cfg.emit_source:
        Path(cfg.emit_source).write_text(emit_balanced_source(out.netlist, module))
    if cfg.dump_constraints and out.retimed is not None:
        Path(cfg.dump_constraints).write_text("\n".join(out.retimed.constraints.lines()) + "\n")
    if cfg.dump_model:
        model = out.retimed.model if out.retimed is not None else None
        if model is None:
            from .hlsmodel import build_hls_model
            model = build_hls_model(g, cfg.clock)
        Path(cfg.dump_model).write_text(model.to_dot())
    if cfg.report:
        Path(cfg.report).write_text(report_text(rep))
    return out


def report_text(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True) + "\n"


def check_failed(rep: dict) -> bool:
    if rep.get("balanced") is False or rep.get("equivalent") is False:
        return True
    rc = rep.get("recombination")
    return bool(rc) and not rc["correct"]
