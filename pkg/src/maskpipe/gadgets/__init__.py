"""Two-share masked AND gadgets and the masking pass.

Each gadget is stored as a JSON netlist under ``data/v1``.  Template inputs
are ``a0 a1 b0 b1`` followed by the gadget's random wires; outputs are
``c0 c1``.  Nodes flagged ``reg`` are the register positions the gadget
needs for glitch robustness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from ..dfg import CONSTS, Dfg, Kind, validate_dfg
from ..errors import ValidationError

TEMPLATE_VERSION = "v1"


class GadgetKind(str, Enum):
    DOM = "DOM"
    HPC1 = "HPC1"
    HPC2 = "HPC2"
    COMAR = "COMAR"

    @classmethod
    def parse(cls, s: "str | GadgetKind") -> "GadgetKind":
        if isinstance(s, GadgetKind):
            return s
        try:
            return cls(s.upper())
        except ValueError:
            raise ValueError(f"unknown gadget {s!r}; choose from "
                             f"{', '.join(k.value.lower() for k in cls)}") from None


@dataclass(frozen=True)
class GadgetInstance:
    kind: GadgetKind
    share_inputs: tuple[int, int, int, int]
    random_inputs: tuple[int, ...]
    share_outputs: tuple[int, int]
    annotated_nodes: frozenset[int]


@lru_cache(maxsize=None)
def _template_json(kind: GadgetKind) -> str:
    path = resources.files(__package__).joinpath("data", TEMPLATE_VERSION, f"{kind.value.lower()}.json")
    return path.read_text(encoding="utf-8")


def template(kind: GadgetKind | str) -> Dfg:
    """Standalone gadget circuit (fresh copy)."""
    return Dfg.from_json(json.loads(_template_json(GadgetKind.parse(kind))))


def random_arity(kind: GadgetKind | str) -> int:
    return len(json.loads(_template_json(GadgetKind.parse(kind)))["randoms"])


def annotation_count(kind: GadgetKind | str) -> int:
    return len(template(kind).annotated_nodes())


def instantiate_gadget(g: Dfg, kind: GadgetKind | str, a: tuple[int, int], b: tuple[int, int],
                       randoms: list[int] | tuple[int, ...], prefix: str = "") -> GadgetInstance:
    """Splice one gadget into ``g`` over existing wires ``a``, ``b`` and ``randoms``.

    Gate names are the template names with ``prefix`` prepended.
    """
    kind = GadgetKind.parse(kind)
    t = template(kind)
    n_in = 4 + random_arity(kind)
    if len(randoms) != n_in - 4:
        raise ValueError(f"{kind.value} needs {n_in - 4} random wire(s), got {len(randoms)}")
    wires = dict(zip(t.input_names, (a[0], a[1], b[0], b[1], *randoms)))
    remap = {t.inputs[i]: wires[t.nodes[t.inputs[i]].name] for i in range(len(t.inputs))}
    ann = set()
    for nid in t.topo_order():
        n = t.nodes[nid]
        if n.kind == Kind.INPUT or n.kind == Kind.OUTPUT:
            continue
        name = f"{prefix}{n.name}" if n.name else None
        new = g.add_node(n.kind, tuple(remap[x] for x in n.args), name, n.annotated)
        remap[nid] = new
        if n.annotated:
            ann.add(new)
    outs = tuple(remap[t.nodes[o].args[0]] for o in t.outputs)
    return GadgetInstance(kind, (a[0], a[1], b[0], b[1]), tuple(randoms), outs, frozenset(ann))


def _fresh(used: set[str], base: str) -> str:
    name, k = base, 1
    while name in used:
        name = f"{base}_{k}"
        k += 1
    used.add(name)
    return name


def apply_masking_pass(unmasked: Dfg, kind: GadgetKind | str, share_all_randoms: bool = False) -> Dfg:
    """Rewrite an unmasked circuit into its two-share gadget-masked form.

    Input ``x`` becomes ``x_0``/``x_1``, output ``y`` becomes ``y_0``/``y_1``.
    XOR is applied share-wise, NOT inverts share 0, constants live on share 0
    and every AND becomes a gadget with fresh random inputs appended after
    the shares.  With ``share_all_randoms`` and COMAR all gadgets reuse one
    random set.
    """
    kind = GadgetKind.parse(kind)
    diags = validate_dfg(unmasked)
    if diags:
        raise ValidationError(diags)
    if unmasked.annotated_nodes():
        raise ValueError("masking pass expects an annotation-free circuit")
    n_rand = random_arity(kind)
    share_all = share_all_randoms and kind == GadgetKind.COMAR

    g = Dfg(f"{unmasked.name}_{kind.value.lower()}")
    used = {n.name for n in unmasked.nodes.values() if n.name}
    shares: dict[int, tuple[int | None, int | None]] = {}  # None == constant zero
    share_names = {}
    for i in unmasked.inputs:
        x = unmasked.nodes[i].name
        s0 = g.add_input(_fresh(used, f"{x}_0"))
        s1 = g.add_input(_fresh(used, f"{x}_1"))
        shares[i] = (s0, s1)
        share_names[x] = [g.nodes[s0].name, g.nodes[s1].name]

    # reserve output share names up front so gate labels never take them
    out_names = {}
    for o in unmasked.outputs:
        y = unmasked.nodes[o].name
        out_names[y] = [_fresh(used, f"{y}_0"), _fresh(used, f"{y}_1")]

    randoms: list[str] = []
    shared_set: list[int] | None = None
    # randoms are declared as inputs lazily but must come after the shares,
    # so collect them and reorder the port list at the end
    def new_randoms() -> list[int]:
        nonlocal shared_set
        if share_all and shared_set is not None:
            return shared_set
        ids = []
        for _ in range(n_rand):
            nm = _fresh(used, f"rnd{len(randoms)}")
            randoms.append(nm)
            ids.append(g.add_input(nm))
        if share_all:
            shared_set = ids
        return ids

    def wire(s: int | None) -> int:
        if s is not None:
            return s
        return g.add_const(0)

    def label(nid: int, j: int) -> str | None:
        nm = unmasked.nodes[nid].name
        return _fresh(used, f"{nm}_{j}") if nm else None

    n_gadgets = 0
    for nid in unmasked.topo_order():
        n = unmasked.nodes[nid]
        k = n.kind
        if k == Kind.INPUT or k == Kind.OUTPUT:
            continue
        if k in CONSTS:
            shares[nid] = (g.add_const(1) if k == Kind.CONST1 else None, None)
        elif k == Kind.BUF:
            shares[nid] = shares[n.args[0]]
        elif k == Kind.NOT:
            s0, s1 = shares[n.args[0]]
            shares[nid] = (g.add_gate(Kind.NOT, wire(s0), name=label(nid, 0)), s1)
        elif k == Kind.XOR:
            (a0, a1), (b0, b1) = shares[n.args[0]], shares[n.args[1]]
            out = []
            for j, (x, y) in enumerate(((a0, b0), (a1, b1))):
                if x is None:
                    out.append(y)
                elif y is None:
                    out.append(x)
                else:
                    out.append(g.add_gate(Kind.XOR, x, y, name=label(nid, j)))
            shares[nid] = tuple(out)
        elif k == Kind.AND:
            (a0, a1), (b0, b1) = shares[n.args[0]], shares[n.args[1]]
            first = g.next_id
            inst = instantiate_gadget(g, kind, (wire(a0), wire(a1)), (wire(b0), wire(b1)),
                                      new_randoms(), prefix=_fresh(used, f"g{n_gadgets}") + "_")
            n_gadgets += 1
            used.update(g.nodes[x].name for x in range(first, g.next_id) if g.nodes[x].name)
            shares[nid] = inst.share_outputs
        else:
            raise AssertionError(k)

    for o in unmasked.outputs:
        s0, s1 = shares[unmasked.nodes[o].args[0]]
        n0, n1 = out_names[unmasked.nodes[o].name]
        g.add_output(n0, wire(s0))
        g.add_output(n1, wire(s1))

    # shares first, randoms after, in creation order
    rand_set = set(randoms)
    g.inputs = ([i for i in g.inputs if g.nodes[i].name not in rand_set]
                + [i for i in g.inputs if g.nodes[i].name in rand_set])
    g.meta["masking"] = {"kind": kind.value, "inputs": share_names, "outputs": out_names,
                         "randoms": randoms, "gadgets": n_gadgets}
    return g


__all__ = ["GadgetKind", "GadgetInstance", "instantiate_gadget", "apply_masking_pass",
           "template", "random_arity", "annotation_count"]
