"""Independent oracles and generators used by the tests only."""

from __future__ import annotations

import re
from itertools import product

import numpy as np

from maskpipe.dfg import CONSTS, Dfg, Kind
from maskpipe.netlist import PipelinedNetlist

GATE_KINDS = (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF)


def random_circuit(rng: np.random.Generator, max_nodes: int = 40, p_ann: float = 0.3,
                   consts: bool = False) -> Dfg:
    """Random valid DAG circuit with every input used and no dead code.

    ``max_nodes`` bounds inputs + gates + outputs.  Buffers are always
    annotated.
    """
    g = Dfg("rand")
    n_in = int(rng.integers(1, 7))
    n_gates = int(rng.integers(1, max(2, max_nodes - n_in - 4)))
    pool = [g.add_input(f"x{i}") for i in range(n_in)]
    if consts and rng.random() < 0.3:
        pool.append(g.add_const(int(rng.integers(0, 2))))
    unused = list(pool)
    for k in range(n_gates):
        kind = GATE_KINDS[int(rng.choice(4, p=[0.35, 0.4, 0.15, 0.1]))]
        arity = 2 if kind in (Kind.AND, Kind.XOR) else 1
        args = []
        for _ in range(arity):
            if unused and rng.random() < 0.6:
                args.append(unused.pop(int(rng.integers(len(unused)))))
            else:
                args.append(pool[int(rng.integers(len(pool)))])
        if kind == Kind.BUF and g.nodes[args[0]].kind in CONSTS:
            kind = Kind.NOT  # reg(1) is not valid source
        # a plain buffer has no source form (``t = x`` is an alias), only ``reg(x)``
        ann = kind == Kind.BUF or bool(rng.random() < p_ann)
        nid = g.add_gate(kind, *args, annotated=ann)
        pool.append(nid)
        unused.append(nid)
        for a in args:
            if a in unused and a != nid:
                unused.remove(a)
    fan = g.fanout()
    sinks = [u for u in pool if not fan[u] and g.nodes[u].kind not in CONSTS]
    for j, u in enumerate(sinks[:6]):
        g.add_output(f"o{j}", u)
    # fold the remaining sinks into the last output so nothing is dead
    if len(sinks) > 6:
        acc = g.nodes[g.outputs[-1]].args[0]
        for u in sinks[6:]:
            acc = g.add_gate(Kind.XOR, acc, u)
        last = g.nodes[g.outputs[-1]]
        g.nodes[last.id] = type(last)(last.id, last.kind, (acc,), last.name, False)
    # constants nobody reads would be dead code
    for nid in list(g.nodes):
        n = g.nodes[nid]
        if n.kind in CONSTS and not g.fanout()[nid]:
            del g.nodes[nid]
    if rng.random() < 0.2 and g.outputs:
        # an extra output sharing a driver
        g.add_output(f"o{len(g.outputs)}", g.nodes[g.outputs[0]].args[0])
    return g


def brute_wd(model) -> tuple[dict, dict]:
    """W and D by enumerating every simple path of the model.

    A path may use the back edge at most once (it is simple); its delay is
    the larger of the two segment delays around the back edge.
    """
    n = model.n
    out: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
    for e in range(model.n_edges):
        out[int(model.src[e])].append((int(model.dst[e]), int(model.weight[e]), e == model.back_edge))
    d = model.delay.tolist()
    W, D = {}, {}

    def visit(start, v, w, seg, best_seg, seen):
        key = (start, v)
        total_d = max(best_seg, seg)
        if key not in W or w < W[key] or (w == W[key] and total_d > D[key]):
            W[key], D[key] = w, total_d
        for x, ew, back in out[v]:
            if x in seen:
                continue
            seen.add(x)
            if back:
                visit(start, x, w + ew, d[x], max(best_seg, seg), seen)
            else:
                visit(start, x, w + ew, seg + d[x], best_seg, seen)
            seen.discard(x)

    for u in range(n):
        visit(u, u, 0, d[u], 0, {u})
    return W, D


def enumerate_paths_annotated(g: Dfg) -> int:
    """Largest number of annotated nodes on an input-to-output path, by DFS."""
    fan = g.fanout()
    best = 0

    def go(v, k):
        nonlocal best
        k += g.nodes[v].annotated
        if g.nodes[v].kind == Kind.OUTPUT:
            best = max(best, k)
        for e in fan[v]:
            go(e.dst, k)

    starts = list(g.inputs) + [n.id for n in g.nodes.values() if n.kind in CONSTS]
    for s in starts:
        go(s, 0)
    return best


def path_register_sums(net: PipelinedNetlist) -> set[int]:
    """Register totals of every input-to-output path (constants excluded)."""
    g = net.dfg
    fan = g.fanout()
    sums = set()

    def go(v, k):
        if g.nodes[v].kind == Kind.OUTPUT:
            sums.add(k)
        for e in fan[v]:
            go(e.dst, k + net.edge_regs(e.dst, e.pos))

    for s in g.inputs:
        go(s, 0)
    return sums


def floyd_labels(lines: list[tuple[int, int, int]], n: int) -> np.ndarray | None:
    """Maximal feasible labels via all-pairs shortest paths; None if infeasible.

    ``r(a) - r(b) <= k`` is an edge ``b -> a``.  The maximal solution with
    all labels <= 0 is ``r(v) = min(0, min_u dist(u, v))``.
    """
    INF = 1 << 40
    dist = np.full((n, n), INF, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    for a, b, k in lines:
        dist[b, a] = min(dist[b, a], k)
    for m in range(n):
        dist = np.minimum(dist, dist[:, m:m + 1] + dist[m:m + 1, :])
    if (np.diag(dist) < 0).any():
        return None
    return np.minimum(0, dist.min(axis=0))


def brute_feasible(lines: list[tuple[int, int, int]], n: int, lo: int = -3) -> bool:
    """Exhaustive search for labels in ``[lo, 0]``."""
    for r in product(range(lo, 1), repeat=n):
        if all(r[a] - r[b] <= k for a, b, k in lines):
            return True
    return False


# -- a reader for the emitted Verilog subset --------------------------------

_ASSIGN = re.compile(r"^\s*assign\s+(\w+)\s*=\s*(.+);$")
_FLOP = re.compile(r"^\s*always @\(posedge (\w+)\)\s+(\w+)\s*<=\s*(\w+);$")
_DECL = re.compile(r"^\s*(input|output|wire|reg)\s+(\w+);$")


class VerilogSim:
    """Cycle simulator for the emitted subset: assigns, flops, ports."""

    def __init__(self, text: str):
        self.inputs: list[str] = []
        self.outputs: list[str] = []
        self.assigns: dict[str, str] = {}
        self.flops: dict[str, str] = {}
        self.clock = None
        for line in text.splitlines():
            if m := _DECL.match(line):
                kind, name = m.groups()
                if kind == "input":
                    self.inputs.append(name)
                elif kind == "output":
                    self.outputs.append(name)
            elif m := _ASSIGN.match(line):
                self.assigns[m.group(1)] = m.group(2)
            elif m := _FLOP.match(line):
                self.clock = m.group(1)
                self.flops[m.group(2)] = m.group(3)
        if self.clock in self.inputs:
            self.inputs.remove(self.clock)
        elif self.inputs and self.inputs[0] == "clk":
            self.inputs.pop(0)

    def _eval(self, name: str, env: dict) -> bool:
        if name in env:
            return env[name]
        rhs = self.assigns[name]
        toks = rhs.split()
        if len(toks) == 1:
            t = toks[0]
            if t.startswith("~"):
                v = not self._operand(t[1:], env)
            else:
                v = self._operand(t, env)
        else:
            a, op, b = toks
            x, y = self._operand(a, env), self._operand(b, env)
            v = (x and y) if op == "&" else (x != y)
        env[name] = v
        return v

    def _operand(self, t: str, env: dict) -> bool:
        if t == "1'b0":
            return False
        if t == "1'b1":
            return True
        return self._eval(t, env)

    def run(self, X: np.ndarray) -> np.ndarray:
        state = {q: False for q in self.flops}
        outs = []
        for row in X:
            env = dict(zip(self.inputs, (bool(x) for x in row)))
            env.update(state)
            outs.append([self._eval(o, env) for o in self.outputs])
            state = {q: self._operand(d, env) for q, d in self.flops.items()}
        return np.array(outs, dtype=bool).reshape(len(X), len(self.outputs))
