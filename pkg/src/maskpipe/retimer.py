"""Constraint generation, difference-constraint solving and retiming.

Conventions used throughout (labels ``r``, edge ``u -> v`` of weight ``w``):

* retimed weight      ``w_r(u -> v) = w + r(u) - r(v)``
* feasibility         ``r(v) - r(u) <= w``            (keeps ``w_r >= 0``)
* critical path       ``r(v) - r(u) <= W(u, v) - 1``  when ``D(u, v) > c``
* register lock       ``r(Ri) = r(Ro)``

Labels are shortest-path distances from a virtual node joined to every
label by a 0-weight edge, which makes them the componentwise maximal
solution.  With this orientation a label that drops by ``k`` across an edge
puts ``k`` registers on it, so maximal labels keep registers as late as the
constraints allow.

Path matrices treat the back edge as a timing boundary: a path that wraps
through ``sink -> source`` adds the back-edge registers to ``W`` but its
delay is the larger of the two segment delays, not their sum.  Pipeline
outputs and the next inputs are not joined by logic, so a wrapped path is
never one combinational stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Sequence

import numpy as np

from .errors import ConstraintViolation, NegativeCycle
from .hlsmodel import E_BACK, E_LOCK, HlsModel
from .netlist import PipelinedNetlist, drop_constant_registers

INF = 1 << 28


class ConstraintKind(IntEnum):
    FEASIBILITY = 0
    CRITICAL_PATH = 1
    LOCK_EQUALITY = 2


@dataclass(frozen=True)
class DiffConstraint:
    """``r(lhs) - r(rhs) <= bound``."""

    lhs: int
    rhs: int
    bound: int
    kind: ConstraintKind = ConstraintKind.FEASIBILITY

    def render(self, names: Sequence[str]) -> str:
        return f"r({names[self.lhs]}) - r({names[self.rhs]}) <= {self.bound}"

    def holds(self, labels) -> bool:
        return labels[self.lhs] - labels[self.rhs] <= self.bound


@dataclass
class PathMatrices:
    W: np.ndarray  # W[u, v], INF when v is unreachable from u
    D: np.ndarray  # D[u, v], -1 when unreachable

    def reachable(self) -> np.ndarray:
        return self.W < INF


@dataclass
class ConstraintSet:
    lhs: np.ndarray
    rhs: np.ndarray
    bound: np.ndarray
    kind: np.ndarray
    names: list[str]

    def __len__(self) -> int:
        return len(self.lhs)

    def __iter__(self) -> Iterator[DiffConstraint]:
        for a, b, k, t in zip(self.lhs.tolist(), self.rhs.tolist(), self.bound.tolist(), self.kind.tolist()):
            yield DiffConstraint(a, b, k, ConstraintKind(t))

    def of_kind(self, kind: ConstraintKind) -> "ConstraintSet":
        m = self.kind == kind
        return ConstraintSet(self.lhs[m], self.rhs[m], self.bound[m], self.kind[m], self.names)

    def lines(self) -> list[str]:
        """Textual form, sorted lexicographically."""
        nm = self.names
        return sorted(f"r({nm[a]}) - r({nm[b]}) <= {k}"
                      for a, b, k in zip(self.lhs.tolist(), self.rhs.tolist(), self.bound.tolist()))

    def violations(self, labels: np.ndarray) -> np.ndarray:
        labels = np.asarray(labels)
        return np.nonzero(labels[self.lhs] - labels[self.rhs] > self.bound)[0]

    @classmethod
    def from_list(cls, cs: Sequence[DiffConstraint], names: Sequence[str]) -> "ConstraintSet":
        return cls(np.array([c.lhs for c in cs], dtype=np.int64),
                   np.array([c.rhs for c in cs], dtype=np.int64),
                   np.array([c.bound for c in cs], dtype=np.int64),
                   np.array([int(c.kind) for c in cs], dtype=np.int8), list(names))


@dataclass
class RetimingSolution:
    labels: np.ndarray
    iterations: int = 0

    def __getitem__(self, i: int) -> int:
        return int(self.labels[i])


def _dag_matrices(model: HlsModel) -> tuple[np.ndarray, np.ndarray]:
    """All-pairs (min weight, max delay among min-weight paths) on the DAG.

    Rows are filled per target node in topological order; ``WT[v, u]`` holds
    the value for the path ``u -> v``.
    """
    n = model.n
    d = model.delay.astype(np.int32)
    WT = np.full((n, n), INF, dtype=np.int32)
    DT = np.full((n, n), -1, dtype=np.int32)
    preds: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in range(model.n_edges):
        if model.ekind[e] != E_BACK:
            preds[int(model.dst[e])].append((int(model.src[e]), int(model.weight[e])))
    for v in model.dag_order():
        if preds[v]:
            ps = np.array([p for p, _ in preds[v]])
            ws = np.array([w for _, w in preds[v]], dtype=np.int32)[:, None]
            cw = WT[ps] + ws
            best = cw.min(axis=0)
            cd = np.where(cw == best, DT[ps], -1).max(axis=0)
            reach = best < INF
            WT[v] = np.where(reach, best, INF)
            DT[v] = np.where(reach, cd + d[v], -1)
        WT[v, v] = 0
        DT[v, v] = d[v]
    return WT.T.copy(), DT.T.copy()


def compute_wd(model: HlsModel) -> PathMatrices:
    """Path matrices ``W`` and ``D`` for every ordered node pair."""
    W, D = _dag_matrices(model)
    s, t, m = model.source, model.sink, model.back_weight
    to_sink_w, to_sink_d = W[:, t], D[:, t]
    from_src_w, from_src_d = W[s, :], D[s, :]
    ok = (to_sink_w < INF)[:, None] & (from_src_w < INF)[None, :]
    Wb = np.where(ok, to_sink_w[:, None] + m + from_src_w[None, :], INF).astype(np.int32)
    Db = np.maximum(to_sink_d[:, None], from_src_d[None, :]).astype(np.int32)
    Wf = np.minimum(W, Wb)
    Df = np.where(W < Wb, D, np.where(Wb < W, Db, np.maximum(D, Db)))
    Df = np.where(Wf < INF, Df, -1).astype(np.int32)
    return PathMatrices(Wf, Df)


def gen_constraints(model: HlsModel, wd: PathMatrices, c: float | None = None) -> ConstraintSet:
    """Feasibility, critical-path and lock constraints, exact duplicates removed.

    ``c`` is the clock period in the model's units (delays are normalized so
    the default is 1).
    """
    thr = 1.0 if c is None else float(c)
    n = model.n
    parts = []
    # feasibility: r(v) - r(u) <= w(u -> v)
    parts.append((model.dst.astype(np.int64), model.src.astype(np.int64),
                  model.weight.astype(np.int64), ConstraintKind.FEASIBILITY))
    # critical path: r(v) - r(u) <= W(u, v) - 1 when D(u, v) > c
    u, v = np.nonzero((wd.D > thr) & (wd.W < INF))
    parts.append((v.astype(np.int64), u.astype(np.int64), wd.W[u, v].astype(np.int64) - 1,
                  ConstraintKind.CRITICAL_PATH))
    if model.locks:
        ri = np.array([a for a, _ in model.locks], dtype=np.int64)
        ro = np.array([b for _, b in model.locks], dtype=np.int64)
        parts.append((np.concatenate([ri, ro]), np.concatenate([ro, ri]),
                      np.zeros(2 * len(ri), dtype=np.int64), ConstraintKind.LOCK_EQUALITY))
    lhs = np.concatenate([p[0] for p in parts])
    rhs = np.concatenate([p[1] for p in parts])
    bound = np.concatenate([p[2] for p in parts])
    kind = np.concatenate([np.full(len(p[0]), int(p[3]), dtype=np.int8) for p in parts])
    span = int(max(bound.max(initial=0), -bound.min(initial=0))) + 1
    key = (lhs * n + rhs) * (2 * span + 1) + (bound + span)
    _, first = np.unique(key, return_index=True)
    first.sort()
    return ConstraintSet(lhs[first], rhs[first], bound[first], kind[first], list(model.names))


def solve_constraints(cs: ConstraintSet | Sequence[DiffConstraint], nodes: int | Sequence[str]) -> RetimingSolution:
    """Shortest distances from a virtual node with 0-weight edges to all labels.

    ``r(a) - r(b) <= k`` is the edge ``b -> a`` of weight ``k``.  Label
    correcting in rounds (Bellman-Ford), vectorized over all constraints per
    round; if labels still change after ``N + 1`` rounds a negative cycle
    exists and :class:`NegativeCycle` is raised.
    """
    n = nodes if isinstance(nodes, int) else len(nodes)
    if not isinstance(cs, ConstraintSet):
        cs = ConstraintSet.from_list(list(cs), [str(i) for i in range(n)])
    dist = np.zeros(n, dtype=np.int64)
    if len(cs) == 0:
        return RetimingSolution(dist, 0)
    order = np.argsort(cs.lhs, kind="stable")
    tgt = cs.lhs[order]
    srcs = cs.rhs[order]
    w = cs.bound[order]
    starts = np.flatnonzero(np.r_[True, tgt[1:] != tgt[:-1]])
    targets = tgt[starts]
    for it in range(1, n + 2):
        best = np.minimum.reduceat(dist[srcs] + w, starts)
        cur = dist[targets]
        better = best < cur
        if not better.any():
            return RetimingSolution(dist, it)
        dist[targets[better]] = best[better]
    bad = np.nonzero(dist[cs.lhs] - dist[cs.rhs] > cs.bound)[0]
    raise NegativeCycle(f"constraint graph has a negative cycle ({len(bad)} constraints still violated)",
                        cycle=_find_cycle(cs, n))


def _find_cycle(cs: ConstraintSet, n: int) -> list[int] | None:
    """Recover one negative cycle by predecessor walking (diagnostics only)."""
    dist = np.zeros(n, dtype=np.int64)
    pred = np.full(n, -1, dtype=np.int64)
    last = -1
    for _ in range(n + 1):
        last = -1
        for a, b, k in zip(cs.lhs.tolist(), cs.rhs.tolist(), cs.bound.tolist()):
            if dist[b] + k < dist[a]:
                dist[a] = dist[b] + k
                pred[a] = b
                last = a
        if last < 0:
            return None
    x = last
    for _ in range(n):
        x = int(pred[x])
    cyc, y = [x], int(pred[x])
    while y != x and len(cyc) <= n:
        cyc.append(y)
        y = int(pred[y])
    return [cs.names[i] for i in reversed(cyc)]


def retimed_weights(model: HlsModel, sol: RetimingSolution) -> np.ndarray:
    r = np.asarray(sol.labels, dtype=np.int64)
    return model.weight.astype(np.int64) + r[model.src] - r[model.dst]


def apply_retiming(model: HlsModel, sol: RetimingSolution,
                   cs: ConstraintSet | None = None) -> PipelinedNetlist:
    """Retimed netlist with dummies, locks and the back edge folded away."""
    if cs is not None:
        bad = cs.violations(sol.labels)
        if len(bad):
            c = next(iter(ConstraintSet(cs.lhs[bad[:1]], cs.rhs[bad[:1]], cs.bound[bad[:1]],
                                        cs.kind[bad[:1]], cs.names)))
            raise ConstraintViolation(f"{len(bad)} constraint(s) violated, e.g. {c.render(cs.names)}")
    wr = retimed_weights(model, sol)
    if (wr < 0).any():
        e = int(np.nonzero(wr < 0)[0][0])
        raise ConstraintViolation(f"negative retimed weight on {model.names[model.src[e]]} -> "
                                  f"{model.names[model.dst[e]]}")
    lock = model.ekind == E_LOCK
    if (wr[lock] != 1).any():
        raise ConstraintViolation("a lock register moved")
    if wr[model.back_edge] != 0:
        raise ConstraintViolation("registers left on the back edge")
    regs = {}
    for key, chain in model.chains.items():
        regs[key] = int(wr[chain].sum() - lock[chain].sum())
    net = drop_constant_registers(PipelinedNetlist(model.dfg, regs, model.back_weight))
    missing = net.annotations_met()
    if missing:
        raise ConstraintViolation(f"annotated node {model.dfg.wire_name(missing[0])} lost its register")
    return net


@dataclass
class RetimeResult:
    model: HlsModel
    wd: PathMatrices
    constraints: ConstraintSet
    solution: RetimingSolution
    netlist: PipelinedNetlist


def retime(g, c: float = 1.0) -> RetimeResult:
    """Run model construction, constraint generation, solving and retiming."""
    from .hlsmodel import build_hls_model

    model = build_hls_model(g, c)
    wd = compute_wd(model)
    cs = gen_constraints(model, wd)
    sol = solve_constraints(cs, model.names)
    net = apply_retiming(model, sol, cs)
    return RetimeResult(model, wd, cs, sol, net)
