"""Command-line driver.

Exit codes: 0 ok, 2 input could not be read or parsed, 3 invalid circuit or
options, 4 solver invariant broken, 5 check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .compiler import CompileConfig, check_failed, compile_dfg, report_text, run
from .errors import ConstraintViolation, NegativeCycle, ParseError, ValidationError
from .gadgets import GadgetKind

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_SOLVER, EXIT_CHECK = 0, 2, 3, 4, 5
SEED_ENV = "MASKEDHLS_SEED"

log = logging.getLogger("maskpipe")


def _resolve_input(path: str) -> Path:
    """Existing file, else a shipped benchmark of that name."""
    p = Path(path)
    if p.exists():
        return p
    from .benchmarks.corpus import data_path, shipped_names

    name = p.name if p.name.endswith(".c") else p.name + ".c"
    if name in shipped_names():
        log.info("using shipped benchmark %s", name)
        return data_path(name)
    return p


def _seed(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            log.warning("ignoring non-integer %s=%r", SEED_ENV, env)
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="maskpipe", description="Register balancing for masked circuits.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", help="balance one circuit")
    c.add_argument("input", help="masked-C source or JSON netlist (or a shipped benchmark name)")
    c.add_argument("--format", choices=["c", "json"], default=None, help="input format (default: by suffix)")
    c.add_argument("--gadget", type=GadgetKind.parse, default=None, metavar="{dom,hpc1,hpc2,comar}",
                   help="mask an unmasked input with this AND gadget first")
    c.add_argument("--share-randoms", action="store_true", help="COMAR: reuse one random set for all gadgets")
    c.add_argument("--clock", type=float, default=1.0, help="target clock period (gate delays are 1)")
    c.add_argument("--emit-verilog", type=Path, metavar="FILE")
    c.add_argument("--emit-source", type=Path, metavar="FILE", help="balanced masked-C source")
    c.add_argument("--report", type=Path, metavar="FILE", help="JSON report")
    c.add_argument("--dump-constraints", type=Path, metavar="FILE")
    c.add_argument("--dump-model", type=Path, metavar="FILE", help="timing model as Graphviz DOT")
    c.add_argument("--naive", action="store_true", help="use full pipeline cuts instead of retiming")
    c.add_argument("--check", action="store_true", help="simulate and compare with the input circuit")
    c.add_argument("--trials", type=int, default=10_000)
    c.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
    c.add_argument("--module-name", default=None)
    c.add_argument("--no-runtime", action="store_true", help="leave runtime out of the report")

    b = sub.add_parser("benchmarks", help="balance every shipped benchmark and print a table")
    b.add_argument("--json", action="store_true")
    b.add_argument("--only", choices=["present", "aes"], default=None)

    e = sub.add_parser("corpus", help="write the shipped benchmark sources to a directory")
    e.add_argument("outdir", type=Path)
    return ap


def _compile(args) -> int:
    cfg = CompileConfig(
        input=_resolve_input(args.input), fmt=args.format, gadget=args.gadget,
        share_randoms=args.share_randoms, clock=args.clock, emit_verilog=args.emit_verilog,
        emit_source=args.emit_source, report=args.report, dump_constraints=args.dump_constraints,
        dump_model=args.dump_model, naive=args.naive, check=args.check, trials=args.trials,
        seed=_seed(args.seed), module_name=args.module_name, runtime_in_report=not args.no_runtime)
    try:
        out = run(cfg)
    except (OSError, ParseError) as e:
        print(f"maskpipe: {cfg.input}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, ValueError) as e:
        print(f"maskpipe: {cfg.input}: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NegativeCycle, ConstraintViolation) as e:
        print(f"maskpipe: solver invariant broken: {e}", file=sys.stderr)
        return EXIT_SOLVER
    rep = out.report
    if not args.report:
        sys.stdout.write(report_text(rep))
    if check_failed(rep):
        print("maskpipe: check failed", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def benchmark_rows(only: str | None = None) -> list[dict]:
    from .benchmarks.corpus import UNMASKED, masked_dfg

    rows = []
    for bench in UNMASKED:
        if only and bench != only:
            continue
        for k in GadgetKind:
            r = compile_dfg(masked_dfg(bench, k)).report
            rows.append({"benchmark": f"{bench}_{k.value.lower()}", **{
                key: r[key] for key in ("ann_regs", "bal_regs", "total_regs", "latency", "naive_registers",
                                        "naive_latency", "savings_regs_pct", "savings_latency_pct")}})
    return rows


def _benchmarks(args) -> int:
    rows = benchmark_rows(args.only)
    if args.json:
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    head = f"{'benchmark':<14} {'ann':>5} {'bal':>5} {'total':>6} {'lat':>4} {'naive':>6} {'nlat':>5} {'save%':>6} {'lat%':>6}"
    print(head)
    for r in rows:
        print(f"{r['benchmark']:<14} {r['ann_regs']:>5} {r['bal_regs']:>5} {r['total_regs']:>6} {r['latency']:>4} "
              f"{r['naive_registers']:>6} {r['naive_latency']:>5} {r['savings_regs_pct']:>6.1f} "
              f"{r['savings_latency_pct']:>6.1f}")
    return EXIT_OK


def _corpus(args) -> int:
    from .benchmarks.corpus import regenerate

    for p in regenerate(args.outdir):
        print(p)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    return {"compile": _compile, "benchmarks": _benchmarks, "corpus": _corpus}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
