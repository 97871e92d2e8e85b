"""Cycle-accurate simulation, equivalence and balance checks, naive baseline."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .dfg import CONSTS, Dfg, Kind
from .netlist import PipelinedNetlist, drop_constant_registers

EXHAUSTIVE_LIMIT = 16


@dataclass
class SimTrace:
    input_names: list[str]
    output_names: list[str]
    inputs: np.ndarray   # (cycles, n_inputs) bool
    outputs: np.ndarray  # (cycles, n_outputs) bool
    wires: dict[str, np.ndarray] | None = None

    @property
    def cycles(self) -> int:
        return self.inputs.shape[0]

    def output(self, name: str) -> np.ndarray:
        return self.outputs[:, self.output_names.index(name)]


def _input_matrix(g: Dfg, inputs) -> np.ndarray:
    names = g.input_names
    if isinstance(inputs, Mapping):
        missing = [s for s in names if s not in inputs]
        if missing:
            raise ValueError(f"missing input series for {missing}")
        cols = [np.asarray(inputs[s], dtype=bool).ravel() for s in names]
        lens = {len(c) for c in cols}
        if len(lens) > 1:
            raise ValueError("input series have different lengths")
        return np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=bool)
    arr = np.asarray(inputs, dtype=bool)
    if arr.ndim != 2 or arr.shape[1] != len(names):
        raise ValueError(f"expected (cycles, {len(names)}) input array, got shape {arr.shape}")
    return arr


def _shift(x: np.ndarray, k: int) -> np.ndarray:
    """Delay a per-cycle series by ``k`` flops that power up at 0."""
    if k == 0:
        return x
    out = np.zeros_like(x)
    if k < len(x):
        out[k:] = x[: len(x) - k]
    return out


def simulate(net: PipelinedNetlist, inputs, keep_wires: bool = False) -> SimTrace:
    """Feed one input vector per cycle and record the outputs of every cycle.

    The netlist is feed-forward, so each wire's whole time series is computed
    at once: an operand behind ``k`` registers is the producer's series
    delayed by ``k`` cycles.
    """
    g = net.dfg
    X = _input_matrix(g, inputs)
    T = X.shape[0]
    series: dict[int, np.ndarray] = {}
    for j, i in enumerate(g.inputs):
        series[i] = X[:, j]
    for nid in g.topo_order():
        n = g.nodes[nid]
        k = n.kind
        if k == Kind.INPUT:
            continue
        if k == Kind.CONST0:
            series[nid] = np.zeros(T, dtype=bool)
            continue
        if k == Kind.CONST1:
            series[nid] = np.ones(T, dtype=bool)
            continue
        ops = [_shift(series[a], net.edge_regs(nid, p)) for p, a in enumerate(n.args)]
        if k == Kind.AND:
            series[nid] = ops[0] & ops[1]
        elif k == Kind.XOR:
            series[nid] = ops[0] ^ ops[1]
        elif k == Kind.NOT:
            series[nid] = ~ops[0]
        else:
            series[nid] = ops[0]
    outs = np.stack([series[o] for o in g.outputs], axis=1) if g.outputs else np.zeros((T, 0), bool)
    wires = {g.wire_name(i): series[i] for i in g.nodes} if keep_wires else None
    return SimTrace(g.input_names, g.output_names, X, outs, wires)


class StepSimulator:
    """Cycle-by-cycle simulator with explicit flop state.

    Slower than :func:`simulate` but written the way hardware runs, so the
    two can check each other.
    """

    def __init__(self, net: PipelinedNetlist):
        self.net = net
        g = net.dfg
        self.order = [i for i in g.topo_order() if g.nodes[i].kind != Kind.INPUT]
        self.chains = {u: [False] * k for u, k in net.wire_regs().items()}

    def step(self, vector: Sequence[bool]) -> list[bool]:
        g = self.net.dfg
        val: dict[int, bool] = dict(zip(g.inputs, (bool(x) for x in vector)))

        def operand(nid: int, p: int) -> bool:
            a = g.nodes[nid].args[p]
            k = self.net.edge_regs(nid, p)
            return val[a] if k == 0 else self.chains[a][k - 1]

        for nid in self.order:
            n = g.nodes[nid]
            if n.kind == Kind.CONST0:
                val[nid] = False
            elif n.kind == Kind.CONST1:
                val[nid] = True
            elif n.kind == Kind.AND:
                val[nid] = operand(nid, 0) and operand(nid, 1)
            elif n.kind == Kind.XOR:
                val[nid] = operand(nid, 0) != operand(nid, 1)
            elif n.kind == Kind.NOT:
                val[nid] = not operand(nid, 0)
            else:
                val[nid] = operand(nid, 0)
        outs = [val[o] for o in g.outputs]
        # clock edge: every chain shifts by one
        for u, chain in self.chains.items():
            self.chains[u] = [val[u]] + chain[:-1]
        return outs

    def run(self, inputs) -> SimTrace:
        g = self.net.dfg
        X = _input_matrix(g, inputs)
        outs = np.array([self.step(row) for row in X], dtype=bool).reshape(len(X), len(g.outputs))
        return SimTrace(g.input_names, g.output_names, X, outs)


def exhaustive_vectors(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)[None, :]) & 1).astype(bool)


def random_vectors(n: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2, size=(count, n), dtype=np.uint8).astype(bool)


@dataclass
class EquivalenceReport:
    equivalent: bool
    trials: int
    exhaustive: bool
    latency: int
    mismatch_count: int = 0
    mismatches: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def check_equivalence(net: PipelinedNetlist, golden: Dfg, trials: int = 10_000, seed: int = 0,
                      max_listed: int = 20) -> EquivalenceReport:
    """Stream vectors one per cycle and compare against combinational golden.

    Exhaustive when the circuit has at most 16 input bits.  Output of cycle
    ``t + latency`` is compared with the golden evaluation of cycle ``t``.
    """
    g = net.dfg
    if g.input_names != golden.input_names or g.output_names != golden.output_names:
        raise ValueError("netlist and golden model have different ports")
    n = len(g.inputs)
    exhaustive = n <= EXHAUSTIVE_LIMIT
    X = exhaustive_vectors(n) if exhaustive else random_vectors(n, trials, seed)
    N, L = len(X), net.latency
    stream = np.concatenate([X, np.zeros((L, n), dtype=bool)]) if L else X
    trace = simulate(net, stream)
    want = golden.evaluate({s: X[:, j] for j, s in enumerate(golden.input_names)})
    want = np.stack([want[s] for s in golden.output_names], axis=1) if golden.outputs else np.zeros((N, 0), bool)
    got = trace.outputs[L:L + N]
    diff = got != want
    rows, cols = np.nonzero(diff)
    listed = [{"cycle": int(r + L), "trial": int(r), "wire": g.output_names[c],
               "expected": int(want[r, c]), "got": int(got[r, c])}
              for r, c in zip(rows[:max_listed].tolist(), cols[:max_listed].tolist())]
    return EquivalenceReport(not diff.any(), N, exhaustive, L, int(diff.any(axis=1).sum()), listed)


@dataclass
class BalanceReport:
    balanced: bool
    latency: int | None
    witness: dict | None = None


def check_balance(net: PipelinedNetlist) -> BalanceReport:
    """Register depth by forward propagation; balanced iff every node's operands agree.

    Constants carry no timing and are skipped.
    """
    g = net.dfg
    depth: dict[int, int | None] = {}
    for nid in g.topo_order():
        n = g.nodes[nid]
        if n.kind == Kind.INPUT:
            depth[nid] = 0
            continue
        if n.kind in CONSTS:
            depth[nid] = None
            continue
        seen: tuple[int, int] | None = None
        for p, a in enumerate(n.args):
            if depth[a] is None:
                continue
            d = depth[a] + net.edge_regs(nid, p)
            if seen is None:
                seen = (a, d)
            elif seen[1] != d:
                return BalanceReport(False, None, {
                    "node": g.wire_name(nid),
                    "paths": [{"via": g.wire_name(seen[0]), "registers": seen[1]},
                              {"via": g.wire_name(a), "registers": d}]})
        depth[nid] = None if seen is None else seen[1]
    outs = [(o, depth[o]) for o in g.outputs if depth[o] is not None]
    if len({d for _, d in outs}) > 1:
        (o1, d1), (o2, d2) = min(outs, key=lambda t: t[1]), max(outs, key=lambda t: t[1])
        return BalanceReport(False, None, {
            "node": "outputs",
            "paths": [{"via": g.wire_name(o1), "registers": d1},
                      {"via": g.wire_name(o2), "registers": d2}]})
    return BalanceReport(True, outs[0][1] if outs else 0, None)


def logic_depth(g: Dfg) -> dict[int, float]:
    """ASAP level: inputs and constants at 0, each gate one past its deepest operand."""
    depth: dict[int, float] = {}
    for nid in g.topo_order():
        n = g.nodes[nid]
        if n.kind == Kind.INPUT or n.kind in CONSTS:
            depth[nid] = 0
        elif n.kind == Kind.OUTPUT:
            depth[nid] = float("inf")
        else:
            depth[nid] = 1 + max(depth[a] for a in n.args)
    return depth


def naive_balance(g: Dfg) -> PipelinedNetlist:
    """Full pipeline cuts at every logic level that holds an annotated node.

    Each cut registers every wire that crosses it, so annotated results get
    their register and all parallel wires are balanced.  The latency is the
    number of cuts.
    """
    depth = logic_depth(g)
    levels = sorted({depth[a] for a in g.annotated_nodes()})
    lv = np.array(levels, dtype=float)
    regs = {}
    for n in g.nodes.values():
        for p, a in enumerate(n.args):
            lo, hi = depth[a], depth[n.id]
            regs[(n.id, p)] = int(((lv >= lo) & (lv < hi)).sum())
    return drop_constant_registers(PipelinedNetlist(g, regs, len(levels)))


def savings(naive: float, tool: float) -> float:
    """Relative saving in percent, ``(naive - tool) / naive``."""
    return 0.0 if naive == 0 else 100.0 * (naive - tool) / naive


def share_separation_violations(g: Dfg) -> list[str]:
    """Nodes whose register-free input cone holds both shares of one secret.

    Needs the masking metadata written by the masking pass.  Cones stop at
    annotated nodes, which will be registered.
    """
    info = g.meta.get("masking")
    if not info:
        raise ValueError("circuit carries no masking metadata")
    secret_of = {}
    for x, (s0, s1) in info["inputs"].items():
        secret_of[s0] = (x, 0)
        secret_of[s1] = (x, 1)
    cone: dict[int, frozenset] = {}
    bad = []
    for nid in g.topo_order():
        n = g.nodes[nid]
        if n.kind == Kind.INPUT:
            cone[nid] = frozenset([secret_of[n.name]]) if n.name in secret_of else frozenset()
            continue
        acc = frozenset()
        for a in n.args:
            acc |= frozenset() if g.nodes[a].annotated else cone[a]
        own = acc
        secrets = {}
        for x, s in own:
            secrets.setdefault(x, set()).add(s)
        if n.kind != Kind.OUTPUT and any(len(v) > 1 for v in secrets.values()):
            bad.append(g.wire_name(nid))
        cone[nid] = own
    return bad


RECOMBINATION_EXHAUSTIVE_LIMIT = 20


@dataclass
class RecombinationReport:
    correct: bool
    trials: int
    exhaustive: bool
    failures: int


def check_recombination(masked: Dfg, unmasked: Dfg, trials: int = 100_000, seed: int = 0) -> RecombinationReport:
    """XOR of the output shares must equal the unmasked function, for any randomness.

    Exhaustive over shares and randoms up to 20 input bits, random trials
    beyond that.  Needs the masking metadata.
    """
    info = masked.meta.get("masking")
    if not info:
        raise ValueError("circuit carries no masking metadata")
    n = len(masked.inputs)
    exhaustive = n <= RECOMBINATION_EXHAUSTIVE_LIMIT
    X = exhaustive_vectors(n) if exhaustive else random_vectors(n, trials, seed)
    cols = {s: X[:, j] for j, s in enumerate(masked.input_names)}
    got = masked.evaluate(cols)
    plain = unmasked.evaluate({x: cols[s0] ^ cols[s1] for x, (s0, s1) in info["inputs"].items()})
    bad = np.zeros(len(X), dtype=bool)
    for y, (s0, s1) in info["outputs"].items():
        bad |= (got[s0] ^ got[s1]) != plain[y]
    return RecombinationReport(not bad.any(), len(X), exhaustive, int(bad.sum()))
