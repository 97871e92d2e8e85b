"""Single-bit dataflow graphs with register annotations.

A :class:`Dfg` is the circuit under compilation.  Nodes are boolean operators
over 1-bit wires; ``annotated`` marks a node whose result must be followed by
a register (written ``reg(...)`` in source form).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

import numpy as np


class Kind(str, Enum):
    INPUT = "INPUT"
    OUTPUT = "OUTPUT"
    AND = "AND"
    XOR = "XOR"
    NOT = "NOT"
    # identity gate; only produced by ``reg(wire)`` so a register can sit on
    # an existing wire without inventing logic
    BUF = "BUF"
    CONST0 = "CONST0"
    CONST1 = "CONST1"


ARITY = {
    Kind.INPUT: 0,
    Kind.OUTPUT: 1,
    Kind.AND: 2,
    Kind.XOR: 2,
    Kind.NOT: 1,
    Kind.BUF: 1,
    Kind.CONST0: 0,
    Kind.CONST1: 0,
}

GATES = frozenset({Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF})
CONSTS = frozenset({Kind.CONST0, Kind.CONST1})


@dataclass
class Node:
    id: int
    kind: Kind
    args: tuple[int, ...] = ()
    name: str | None = None
    annotated: bool = False


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    pos: int  # operand position at dst


@dataclass(frozen=True)
class Diagnostic:
    code: str
    node: int | None
    message: str

    def __str__(self) -> str:
        where = f"node {self.node}: " if self.node is not None else ""
        return f"[{self.code}] {where}{self.message}"


class CycleError(ValueError):
    pass


@dataclass
class Dfg:
    name: str = "top"
    nodes: dict[int, Node] = field(default_factory=dict)
    inputs: list[int] = field(default_factory=list)
    outputs: list[int] = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    next_id: int = field(default=0, repr=False, compare=False)

    # -- construction -----------------------------------------------------

    def _new_id(self) -> int:
        if self.next_id <= 0 and self.nodes:
            self.next_id = max(self.nodes) + 1
        return self.next_id

    def add_node(self, kind: Kind, args: Iterable[int] = (), name: str | None = None,
                 annotated: bool = False, node_id: int | None = None) -> int:
        nid = self._new_id() if node_id is None else node_id
        if nid in self.nodes:
            raise ValueError(f"duplicate node id {nid}")
        self.nodes[nid] = Node(nid, Kind(kind), tuple(args), name, annotated)
        self.next_id = max(self._new_id(), nid + 1)
        if kind == Kind.INPUT:
            self.inputs.append(nid)
        elif kind == Kind.OUTPUT:
            self.outputs.append(nid)
        return nid

    def add_input(self, name: str) -> int:
        return self.add_node(Kind.INPUT, (), name)

    def add_output(self, name: str, driver: int) -> int:
        return self.add_node(Kind.OUTPUT, (driver,), name)

    def add_gate(self, kind: Kind, *args: int, name: str | None = None,
                 annotated: bool = False) -> int:
        return self.add_node(kind, args, name, annotated)

    def add_const(self, value: int) -> int:
        """The constant node of that value, created on first use."""
        kind = Kind.CONST1 if value else Kind.CONST0
        for n in self.nodes.values():
            if n.kind == kind:
                return n.id
        return self.add_node(kind)

    # -- queries ----------------------------------------------------------

    @property
    def input_names(self) -> list[str]:
        return [self.nodes[i].name for i in self.inputs]

    @property
    def output_names(self) -> list[str]:
        return [self.nodes[o].name for o in self.outputs]

    def node_by_name(self, name: str) -> Node:
        for n in self.nodes.values():
            if n.name == name:
                return n
        raise KeyError(name)

    def edges(self) -> list[Edge]:
        return [Edge(a, n.id, p) for n in self.nodes.values() for p, a in enumerate(n.args)]

    def fanout(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {i: [] for i in self.nodes}
        for n in self.nodes.values():
            for p, a in enumerate(n.args):
                if a in out:
                    out[a].append(Edge(a, n.id, p))
        return out

    def topo_order(self) -> list[int]:
        """Kahn order, ties broken by node id so the result is deterministic."""
        import heapq

        indeg = {i: 0 for i in self.nodes}
        succ: dict[int, list[int]] = {i: [] for i in self.nodes}
        for n in self.nodes.values():
            for a in n.args:
                if a in succ:
                    succ[a].append(n.id)
                    indeg[n.id] += 1
        heap = [i for i, d in indeg.items() if d == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            for v in succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(heap, v)
        if len(order) != len(self.nodes):
            stuck = sorted(i for i, d in indeg.items() if d > 0)
            raise CycleError(f"cycle through nodes {stuck[:8]}")
        return order

    def op_counts(self) -> Counter:
        return Counter(n.kind for n in self.nodes.values())

    def gate_count(self) -> int:
        return sum(1 for n in self.nodes.values() if n.kind in GATES)

    def annotated_nodes(self) -> list[int]:
        return [n.id for n in self.nodes.values() if n.annotated]

    def wire_name(self, nid: int) -> str:
        n = self.nodes[nid]
        return n.name if n.name else f"n{nid}"

    def copy(self) -> "Dfg":
        g = Dfg(self.name, {}, list(self.inputs), list(self.outputs), json.loads(json.dumps(self.meta)))
        for n in self.nodes.values():
            g.nodes[n.id] = Node(n.id, n.kind, n.args, n.name, n.annotated)
        return g

    # -- evaluation -------------------------------------------------------

    def evaluate(self, values: Mapping[str, np.ndarray | int]) -> dict[str, np.ndarray]:
        """Combinational evaluation, registers ignored.

        ``values`` maps input names to bool arrays (all the same shape) or
        scalars.  Returns output name -> bool array.
        """
        shape = None
        for v in values.values():
            a = np.asarray(v)
            if a.ndim:
                shape = a.shape
                break
        shape = shape or ()
        val: dict[int, np.ndarray] = {}
        for nid in self.topo_order():
            n = self.nodes[nid]
            k = n.kind
            if k == Kind.INPUT:
                if n.name not in values:
                    raise KeyError(f"missing value for input {n.name!r}")
                val[nid] = np.broadcast_to(np.asarray(values[n.name], dtype=bool), shape)
            elif k == Kind.CONST0:
                val[nid] = np.zeros(shape, dtype=bool)
            elif k == Kind.CONST1:
                val[nid] = np.ones(shape, dtype=bool)
            elif k == Kind.AND:
                val[nid] = val[n.args[0]] & val[n.args[1]]
            elif k == Kind.XOR:
                val[nid] = val[n.args[0]] ^ val[n.args[1]]
            elif k == Kind.NOT:
                val[nid] = ~val[n.args[0]]
            else:  # BUF, OUTPUT
                val[nid] = val[n.args[0]]
        return {self.nodes[o].name: val[o] for o in self.outputs}

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        nodes = []
        for n in self.nodes.values():
            d = {"id": n.id, "kind": n.kind.value, "args": list(n.args), "reg": n.annotated}
            if n.name is not None:
                d["name"] = n.name
            nodes.append(d)
        out = {"name": self.name, "inputs": self.input_names, "outputs": self.output_names,
               "nodes": nodes}
        if self.meta:
            out["meta"] = self.meta
        return out

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict | str) -> "Dfg":
        if isinstance(data, str):
            data = json.loads(data)
        g = cls(data.get("name", "top"))
        g.meta = dict(data.get("meta", {}))
        for d in data["nodes"]:
            kind = Kind(d["kind"])
            g.nodes[int(d["id"])] = Node(int(d["id"]), kind, tuple(int(a) for a in d.get("args", [])),
                                         d.get("name"), bool(d.get("reg", False)))
        by_name = {}
        for n in g.nodes.values():
            if n.kind in (Kind.INPUT, Kind.OUTPUT):
                if n.name is None:
                    raise ValueError(f"{n.kind.value} node {n.id} needs a name")
                by_name[(n.kind, n.name)] = n.id
        try:
            g.inputs = [by_name[(Kind.INPUT, s)] for s in data.get("inputs", [])]
            g.outputs = [by_name[(Kind.OUTPUT, s)] for s in data.get("outputs", [])]
        except KeyError as e:
            raise ValueError(f"port {e.args[0][1]!r} has no matching node") from None
        listed = set(g.inputs) | set(g.outputs)
        for n in g.nodes.values():
            if n.kind in (Kind.INPUT, Kind.OUTPUT) and n.id not in listed:
                raise ValueError(f"{n.kind.value} node {n.name!r} missing from port list")
        return g


def validate_dfg(g: Dfg) -> list[Diagnostic]:
    """Check the structural invariants; an empty list means the graph is valid."""
    diags: list[Diagnostic] = []
    for n in g.nodes.values():
        if len(n.args) != ARITY[n.kind]:
            diags.append(Diagnostic("arity", n.id, f"{n.kind.value} takes {ARITY[n.kind]} operand(s), "
                                                   f"got {len(n.args)}"))
        for a in n.args:
            if a not in g.nodes:
                diags.append(Diagnostic("dangling", n.id, f"operand {a} does not exist"))
            elif g.nodes[a].kind == Kind.OUTPUT:
                diags.append(Diagnostic("output-read", n.id, f"reads output node {a}"))
        if n.annotated and n.kind not in GATES:
            diags.append(Diagnostic("annotation", n.id, f"{n.kind.value} node cannot carry reg()"))
    for kind, ports in ((Kind.INPUT, g.inputs), (Kind.OUTPUT, g.outputs)):
        names = [g.nodes[p].name for p in ports if p in g.nodes]
        dup = sorted(s for s, c in Counter(names).items() if c > 1)
        if dup:
            diags.append(Diagnostic("port", None, f"duplicate {kind.value.lower()} names {dup}"))
        for p in ports:
            if p not in g.nodes or g.nodes[p].kind != kind:
                diags.append(Diagnostic("port", p, f"listed as {kind.value.lower()} but is not one"))
    named = Counter(n.name for n in g.nodes.values() if n.name and n.kind != Kind.OUTPUT)
    for s, c in named.items():
        if c > 1:
            diags.append(Diagnostic("duplicate-name", None, f"wire name {s!r} used {c} times"))
    if any(d.code == "dangling" for d in diags):
        return diags
    try:
        order = g.topo_order()
    except CycleError as e:
        diags.append(Diagnostic("cycle", None, str(e)))
        return diags
    live = set(g.outputs)
    for nid in reversed(order):
        if nid in live:
            live.update(g.nodes[nid].args)
    for nid in order:
        if nid not in live:
            diags.append(Diagnostic("dead-code", nid, f"{g.wire_name(nid)} reaches no output"))
    return diags


def isomorphic(a: Dfg, b: Dfg) -> bool:
    """Port-anchored structural isomorphism (operand order matters).

    Both graphs are hashed bottom-up from their named ports, so two graphs
    compare equal iff each output is driven by the same operator tree over
    the same inputs with the same sharing.
    """
    if a.input_names != b.input_names or a.output_names != b.output_names:
        return False
    if a.op_counts() != b.op_counts():
        return False

    table: dict[tuple, int] = {}

    def canon(g: Dfg) -> tuple:
        # structural ids interned in a table shared by both graphs
        key: dict[int, int] = {}
        for nid in g.topo_order():
            n = g.nodes[nid]
            if n.kind == Kind.INPUT:
                k = ("in", n.name)
            elif n.kind in CONSTS:
                k = (n.kind.value,)
            else:
                k = (n.kind.value, tuple(key[x] for x in n.args))
            key[nid] = table.setdefault(k, len(table))
        shared = Counter(key[n] for n in g.nodes if g.nodes[n].kind in GATES)
        outs = tuple((g.nodes[o].name, key[o]) for o in g.outputs)
        return outs, shared

    return canon(a) == canon(b)
