"""Pipelined netlists: a Dfg plus a register count on every edge."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dfg import CONSTS, Dfg, Kind

EdgeKey = tuple[int, int]  # (consumer node id, operand position)


@dataclass
class PipelinedNetlist:
    dfg: Dfg
    regs: dict[EdgeKey, int] = field(default_factory=dict)
    latency: int = 0

    def edge_regs(self, consumer: int, pos: int) -> int:
        return self.regs.get((consumer, pos), 0)

    def wire_regs(self) -> dict[int, int]:
        """Flops per driving wire.

        Fanouts of one wire share a single register chain; a consumer that
        needs ``k`` registers taps the chain after the k-th flop.
        """
        out: dict[int, int] = {}
        for (v, p), k in self.regs.items():
            if k:
                u = self.dfg.nodes[v].args[p]
                out[u] = max(out.get(u, 0), k)
        return out

    def register_count(self) -> int:
        return sum(self.wire_regs().values())

    def edge_register_count(self) -> int:
        return sum(self.regs.values())

    def annotated_count(self) -> int:
        return len(self.dfg.annotated_nodes())

    def registered_wires(self) -> list[str]:
        w = self.wire_regs()
        return [self.dfg.wire_name(u) for u in sorted(w)]

    def annotations_met(self) -> list[int]:
        """Annotated nodes that have an outgoing edge without a register."""
        bad = []
        fan = self.dfg.fanout()
        for nid in self.dfg.annotated_nodes():
            if any(self.edge_regs(e.dst, e.pos) < 1 for e in fan[nid]):
                bad.append(nid)
        return bad

    def copy(self) -> "PipelinedNetlist":
        return PipelinedNetlist(self.dfg, dict(self.regs), self.latency)

    def to_json(self) -> dict:
        return {
            "dfg": self.dfg.to_json(),
            "latency": self.latency,
            "edges": [{"consumer": v, "pos": p, "regs": k}
                      for (v, p), k in sorted(self.regs.items()) if k],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PipelinedNetlist":
        g = Dfg.from_json(data["dfg"])
        regs = {(int(e["consumer"]), int(e["pos"])): int(e["regs"]) for e in data["edges"]}
        return cls(g, regs, int(data["latency"]))


def drop_constant_registers(net: PipelinedNetlist) -> PipelinedNetlist:
    """Clear registers on edges leaving constants; a constant needs no pipelining."""
    g = net.dfg
    for (v, p) in list(net.regs):
        if g.nodes[g.nodes[v].args[p]].kind in CONSTS:
            net.regs[(v, p)] = 0
    return net


def zero_netlist(g: Dfg) -> PipelinedNetlist:
    return PipelinedNetlist(g, {(n.id, p): 0 for n in g.nodes.values() for p in range(len(n.args))}, 0)


def annotation_netlist(g: Dfg) -> PipelinedNetlist:
    """One register after every annotated node, nothing else (unbalanced)."""
    regs = {}
    for n in g.nodes.values():
        for p, a in enumerate(n.args):
            regs[(n.id, p)] = 1 if g.nodes[a].annotated else 0
    return PipelinedNetlist(g, regs, 0)


def is_gate(g: Dfg, nid: int) -> bool:
    return g.nodes[nid].kind in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF)
