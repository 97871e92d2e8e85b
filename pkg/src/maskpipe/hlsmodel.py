"""Retiming model of a dataflow graph.

The model turns a :class:`~maskpipe.dfg.Dfg` into a graph that the retimer
can work on:

* all INPUT and constant nodes collapse into one ``source`` node and all
  OUTPUT nodes into one ``sink`` node;
* a back edge ``sink -> source`` carries as many registers as the largest
  number of annotated nodes on any input-to-output path;
* every annotated node ``v`` gets a dummy successor ``v'``.  Both have delay
  1 (the normalized clock period) and everything else has delay 0, so a
  register is forced between them;
* if an annotated node has an annotated descendant, a lock pair
  ``Ri -> Ro`` with one fixed register follows its dummy.  Without it the
  dummy and the next annotated node would form another over-long path and
  force a second, unwanted register.  The lock register is dropped after
  retiming.

Model edges are kept in flat numpy arrays; ``chains`` records, for every
Dfg edge, the model edges it was expanded into.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dfg import CONSTS, Dfg, Kind, validate_dfg
from .errors import ValidationError

SOURCE, SINK, GATE, DUMMY, LOCK_IN, LOCK_OUT = "source", "sink", "gate", "dummy", "lock_in", "lock_out"

# edge kinds
E_DATA, E_DUMMY, E_LOCK, E_BACK = 0, 1, 2, 3


@dataclass
class HlsModel:
    dfg: Dfg
    names: list[str]
    roles: list[str]
    delay: np.ndarray
    src: np.ndarray
    dst: np.ndarray
    weight: np.ndarray
    ekind: np.ndarray
    back_edge: int
    locks: list[tuple[int, int]]
    node_index: dict[int, int]
    dummy_of: dict[int, int]
    chains: dict[tuple[int, int], list[int]]
    clock: float = 1.0
    source: int = 0
    sink: int = 1
    index_of: dict[str, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def n_edges(self) -> int:
        return len(self.src)

    @property
    def back_weight(self) -> int:
        return int(self.weight[self.back_edge])

    def idx(self, name: str) -> int:
        return self.index_of[name]

    def dag_order(self) -> list[int]:
        """Topological order of the model without its back edge."""
        n = self.n
        keep = self.ekind != E_BACK
        indeg = np.bincount(self.dst[keep], minlength=n)
        succ: list[list[int]] = [[] for _ in range(n)]
        for s, d in zip(self.src[keep].tolist(), self.dst[keep].tolist()):
            succ[s].append(d)
        order, stack = [], [v for v in range(n) if indeg[v] == 0]
        stack.reverse()
        indeg = indeg.tolist()
        while stack:
            u = stack.pop()
            order.append(u)
            for v in succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    stack.append(v)
        if len(order) != n:
            raise ValueError("model has a cycle outside the back edge")
        return order

    def to_dot(self) -> str:
        """DOT text: node label carries the delay, edge label the weight."""
        lines = [f'digraph "{self.dfg.name}" {{', "  rankdir=LR;"]
        shapes = {SOURCE: "invhouse", SINK: "house", GATE: "ellipse", DUMMY: "box",
                  LOCK_IN: "diamond", LOCK_OUT: "diamond"}
        for i, (nm, role) in enumerate(zip(self.names, self.roles)):
            lines.append(f'  n{i} [label="{nm}\\nd={int(self.delay[i])}", shape={shapes[role]}];')
        for e in range(self.n_edges):
            style = {E_BACK: ", style=dashed", E_LOCK: ", style=bold"}.get(int(self.ekind[e]), "")
            lines.append(f'  n{self.src[e]} -> n{self.dst[e]} [label="{int(self.weight[e])}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class _Names:
    def __init__(self):
        self.used: set[str] = set()

    def take(self, base: str) -> str:
        name, k = base, 1
        while name in self.used:
            name = f"{base}_{k}"
            k += 1
        self.used.add(name)
        return name


def _has_annotated_descendant(g: Dfg, order: list[int]) -> dict[int, bool]:
    below: dict[int, bool] = {}
    fan = g.fanout()
    for nid in reversed(order):
        below[nid] = any(g.nodes[e.dst].annotated or below[e.dst] for e in fan[nid])
    return below


def build_hls_model(g: Dfg, c: float = 1.0) -> HlsModel:
    """Build the retiming model of ``g`` with normalized clock period ``c``."""
    if not c > 0:
        raise ValueError("target clock must be positive")
    diags = validate_dfg(g)
    if not g.outputs:
        from .dfg import Diagnostic
        diags.append(Diagnostic("port", None, "circuit has no outputs"))
    if diags:
        raise ValidationError(diags)

    order = g.topo_order()
    below = _has_annotated_descendant(g, order)
    gate_names = _Names()
    gate_names.used.update({"source", "sink"})
    names = ["source", "sink"]
    roles = [SOURCE, SINK]
    delay = [0, 0]
    node_index: dict[int, int] = {}
    dummy_of: dict[int, int] = {}
    # model node that a Dfg node's fanout edges leave from
    tail: dict[int, int] = {}
    prefix: dict[int, list[int]] = {}
    src, dst, ekind, weight = [], [], [], []
    locks: list[tuple[int, int]] = []

    def add_node(name, role, d):
        names.append(name)
        roles.append(role)
        delay.append(d)
        return len(names) - 1

    def add_edge(u, v, kind, w=0):
        src.append(u)
        dst.append(v)
        ekind.append(kind)
        weight.append(w)
        return len(src) - 1

    # reserve gate names first so dummies and locks never shadow them
    gate_label = {}
    for nid in order:
        n = g.nodes[nid]
        if n.kind in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF):
            gate_label[nid] = gate_names.take(g.wire_name(nid))

    k = 0
    for nid in order:
        n = g.nodes[nid]
        if n.kind == Kind.INPUT or n.kind in CONSTS:
            tail[nid] = 0
            prefix[nid] = []
            continue
        if n.kind == Kind.OUTPUT:
            continue
        v = add_node(gate_label[nid], GATE, 1 if n.annotated else 0)
        node_index[nid] = v
        tail[nid] = v
        prefix[nid] = []
        if n.annotated:
            k += 1
            d = add_node(gate_names.take(f"d{k}"), DUMMY, 1)
            dummy_of[nid] = d
            chain = [add_edge(v, d, E_DUMMY)]
            last = d
            if below[nid]:
                ri = add_node(gate_names.take(f"R{k}i"), LOCK_IN, 0)
                ro = add_node(gate_names.take(f"R{k}o"), LOCK_OUT, 0)
                chain.append(add_edge(d, ri, E_DATA))
                chain.append(add_edge(ri, ro, E_LOCK, 1))
                locks.append((ri, ro))
                last = ro
            tail[nid] = last
            prefix[nid] = chain

    chains: dict[tuple[int, int], list[int]] = {}
    for nid in order:
        n = g.nodes[nid]
        for pos, a in enumerate(n.args):
            v = 1 if n.kind == Kind.OUTPUT else node_index[nid]
            e = add_edge(tail[a], v, E_DATA)
            chains[(nid, pos)] = prefix[a] + [e]
    back = add_edge(1, 0, E_BACK, 0)

    model = HlsModel(
        dfg=g, names=names, roles=roles, delay=np.array(delay, dtype=np.int32),
        src=np.array(src, dtype=np.int32), dst=np.array(dst, dtype=np.int32),
        weight=np.array(weight, dtype=np.int32), ekind=np.array(ekind, dtype=np.int8),
        back_edge=back, locks=locks, node_index=node_index, dummy_of=dummy_of,
        chains=chains, clock=float(c),
    )
    model.index_of = {nm: i for i, nm in enumerate(names)}
    model.weight[back] = max_extra_regs(model)
    return model


def max_extra_regs(model: HlsModel) -> int:
    """Largest number of annotated nodes on any source-to-sink path.

    Longest-path dynamic programming over the model without its back edge;
    dummies are not counted, only the annotated gates themselves.
    """
    n = model.n
    count = np.full(n, -1, dtype=np.int64)
    count[model.source] = 0
    ann = np.array([r == GATE and model.delay[i] > 0 for i, r in enumerate(model.roles)], dtype=np.int64)
    preds: list[list[int]] = [[] for _ in range(n)]
    for e in range(model.n_edges):
        if model.ekind[e] != E_BACK:
            preds[int(model.dst[e])].append(int(model.src[e]))
    for v in model.dag_order():
        if preds[v]:
            best = max(int(count[p]) for p in preds[v])
            if best >= 0:
                count[v] = best + ann[v]
    return max(int(count[model.sink]), 0)
