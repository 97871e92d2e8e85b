"""Source and Verilog emission for pipelined netlists.

Both emitters translate one-to-one: every gate becomes exactly one
expression or continuous assignment and every register becomes exactly one
``reg(...)`` or one flop.  Nothing is simplified.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from .dfg import CONSTS, Dfg, Kind
from .netlist import PipelinedNetlist, annotation_netlist

log = logging.getLogger(__name__)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_C_RESERVED = {"int", "bool", "void", "return", "reg", "if", "else", "for", "while", "do", "switch",
               "case", "goto", "break", "continue", "struct", "typedef", "union", "enum", "sizeof",
               "static", "const", "unsigned", "char", "long", "short"}

VERILOG_KEYWORDS = frozenset("""
always and assign automatic begin buf bufif0 bufif1 case casex casez cell cmos config deassign
default defparam design disable edge else end endcase endconfig endfunction endgenerate endmodule
endprimitive endspecify endtable endtask event for force forever fork function generate genvar
highz0 highz1 if ifnone incdir include initial inout input instance integer join large liblist
library localparam macromodule medium module nand negedge nmos nor noshowcancelled not notif0
notif1 or output parameter pmos posedge primitive pull0 pull1 pulldown pullup
pulsestyle_onevent pulsestyle_ondetect rcmos real realtime reg release repeat rnmos rpmos rtran
rtranif0 rtranif1 scalared showcancelled signed small specify specparam strong0 strong1 supply0
supply1 table task time tran tranif0 tranif1 tri tri0 tri1 triand trior trireg unsigned use uwire
vectored wait wand weak0 weak1 while wire wor xnor xor
""".split())


class _Namer:
    def __init__(self, reserved=()):
        self.used: set[str] = set(reserved)

    def take(self, base: str) -> str:
        base = re.sub(r"[^A-Za-z0-9_]", "_", base) or "w"
        if not _IDENT.match(base):
            base = "w_" + base
        name, k = base, 1
        while name in self.used:
            name = f"{base}_{k}"
            k += 1
        self.used.add(name)
        return name


def _fanout_regs(net: PipelinedNetlist) -> dict[int, list[tuple[int, int, int]]]:
    """driver -> [(consumer, pos, regs)], constants skipped."""
    g = net.dfg
    fan: dict[int, list[tuple[int, int, int]]] = {i: [] for i in g.nodes}
    for n in g.nodes.values():
        for p, a in enumerate(n.args):
            fan[a].append((n.id, p, net.edge_regs(n.id, p)))
    return fan


def emit_balanced_source(net: PipelinedNetlist, name: str | None = None) -> str:
    """Render ``net`` in the masked-C dialect with explicit ``reg(...)`` wrappers.

    A wire carrying ``k`` registers is written as ``w = reg(e)`` followed by
    ``w_r2 = reg(w)`` ... ``w_rk``; consumers read the tap matching their own
    register count.  Parsing the result and balancing it again reproduces
    the same text.
    """
    g = net.dfg
    fan = _fanout_regs(net)
    order = g.topo_order()
    names = _Namer(_C_RESERVED)
    port_in = [names.take(g.nodes[i].name) for i in g.inputs]
    port_out = [names.take(g.nodes[o].name) for o in g.outputs]
    out_name = dict(zip(g.outputs, port_out))
    for i, nm in zip(g.inputs, port_in):
        if nm != g.nodes[i].name:
            log.warning("input %r renamed to %r", g.nodes[i].name, nm)

    # gates written inline inside their single consumer's expression
    inline = set()
    for nid in order:
        n = g.nodes[nid]
        if n.kind in (Kind.AND, Kind.XOR, Kind.NOT) and not n.name and not n.annotated:
            f = fan[nid]
            # under a BUF the text would read reg(expr), which annotates the gate itself
            if len(f) == 1 and f[0][2] == 0 and g.nodes[f[0][0]].kind not in (Kind.OUTPUT, Kind.BUF):
                inline.add(nid)

    # an output port can absorb its driver when the driver feeds nothing else
    direct: dict[int, int] = {}
    for o in g.outputs:
        u = g.nodes[o].args[0]
        if g.nodes[u].kind in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF) and len(fan[u]) == 1 \
                and fan[u][0][2] <= 1:
            direct[u] = o

    wire: dict[int, str] = {}
    for nid, nm in zip(g.inputs, port_in):
        wire[nid] = nm
    for nid in order:
        n = g.nodes[nid]
        if n.kind in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF) and nid not in inline and nid not in direct:
            wire[nid] = names.take(n.name or f"t{nid}")

    taps: dict[tuple[int, int], str] = {}
    lines: list[str] = []

    def ref(nid: int, k: int) -> str:
        n = g.nodes[nid]
        if n.kind == Kind.CONST0:
            return "0"
        if n.kind == Kind.CONST1:
            return "1"
        if k == 0 and nid in inline:
            return f"({expr(nid)})"
        return taps[(nid, k)]

    def expr(nid: int) -> str:
        n = g.nodes[nid]
        ops = [ref(a, net.edge_regs(nid, p)) for p, a in enumerate(n.args)]
        if n.kind == Kind.AND:
            return f"{ops[0]} * {ops[1]}"
        if n.kind == Kind.XOR:
            return f"{ops[0]} ^ {ops[1]}"
        if n.kind == Kind.NOT:
            return f"~{ops[0]}"
        return ops[0]

    # the last tap of a chain read by a single output is written into the port
    readers: dict[tuple[int, int], list[int]] = {}
    for nid in order:
        for v, _, k in fan[nid]:
            readers.setdefault((nid, k), []).append(v)
    absorbed: set[int] = set()

    def chain(nid: int, base: str, first: str, kmax: int, start: int) -> None:
        """Register taps ``start..kmax`` of ``nid``; tap ``start - 1`` is ``first``."""
        prev = first
        for k in range(start, kmax + 1):
            rd = readers.get((nid, k), [])
            if k == kmax and len(rd) == 1 and g.nodes[rd[0]].kind == Kind.OUTPUT:
                lines.append(f"    *{out_name[rd[0]]} = reg({prev});")
                absorbed.add(rd[0])
                return
            tap = names.take(f"{base}_r{k}")
            lines.append(f"    {tap} = reg({prev});")
            taps[(nid, k)] = tap
            prev = tap

    for nid in order:
        n = g.nodes[nid]
        if n.kind in CONSTS or n.kind == Kind.OUTPUT or nid in inline:
            continue
        regs = [k for _, _, k in fan[nid]]
        kmax = max(regs, default=0)
        if n.kind == Kind.INPUT:
            taps[(nid, 0)] = wire[nid]
            chain(nid, wire[nid], wire[nid], kmax, 1)
            continue
        if nid in direct:
            port = out_name[direct[nid]]
            e = expr(nid)
            lines.append(f"    *{port} = reg({e});" if kmax else f"    *{port} = {e};")
            continue
        w = wire[nid]
        e = expr(nid)
        kmin = min(regs, default=0)
        if kmax and kmin >= 1:
            lines.append(f"    {w} = reg({e});")
            taps[(nid, 1)] = w
            chain(nid, w, w, kmax, 2)
        else:
            lines.append(f"    {w} = {e};")
            taps[(nid, 0)] = w
            chain(nid, w, w, kmax, 1)

    for o in g.outputs:
        u = g.nodes[o].args[0]
        if u in direct or o in absorbed:
            continue
        lines.append(f"    *{out_name[o]} = {ref(u, net.edge_regs(o, 0))};")

    params = [f"bool {s}" for s in port_in] + [f"bool *{s}" for s in port_out]
    head = f"int {name or g.name}({', '.join(params)})"
    return "\n".join([head, "{", *lines, "    return 0;", "}"]) + "\n"


def emit_source(g: Dfg, name: str | None = None) -> str:
    """Annotated source of an unbalanced Dfg: ``reg(...)`` exactly at annotations."""
    return emit_balanced_source(annotation_netlist(g), name)


@dataclass
class VerilogModule:
    name: str
    clock: str
    inputs: list[str]
    outputs: list[str]
    wires: list[str] = field(default_factory=list)
    assigns: list[tuple[str, str]] = field(default_factory=list)
    flops: list[tuple[str, str]] = field(default_factory=list)  # (q, d)
    gate_assigns: int = 0
    renamed: dict[str, str] = field(default_factory=dict)

    def render(self) -> str:
        ports = ", ".join([self.clock, *self.inputs, *self.outputs])
        out = [f"module {self.name}({ports});", f"  input {self.clock};"]
        out += [f"  input {s};" for s in self.inputs]
        out += [f"  output {s};" for s in self.outputs]
        out += [f"  wire {s};" for s in self.wires]
        out += [f"  reg {q};" for q, _ in self.flops]
        out += [f"  assign {lhs} = {rhs};" for lhs, rhs in self.assigns]
        out += [f"  always @(posedge {self.clock}) {q} <= {d};" for q, d in self.flops]
        out.append("endmodule")
        return "\n".join(out) + "\n"


def build_verilog_module(net: PipelinedNetlist, module_name: str = "top") -> VerilogModule:
    g = net.dfg
    fan = _fanout_regs(net)
    names = _Namer(VERILOG_KEYWORDS)
    renamed: dict[str, str] = {}

    def take(base: str) -> str:
        nm = names.take(base)
        if nm != base:
            renamed[base] = nm
        return nm

    mod_name = module_name if module_name not in VERILOG_KEYWORDS and _IDENT.match(module_name) \
        else f"{module_name}_m"
    if mod_name != module_name:
        renamed[module_name] = mod_name
    clock = take("clk")
    inputs = [take(g.nodes[i].name) for i in g.inputs]
    outputs = [take(g.nodes[o].name) for o in g.outputs]
    port_of = dict(zip(g.outputs, outputs))
    wire = dict(zip(g.inputs, inputs))
    m = VerilogModule(mod_name, clock, inputs, outputs, renamed=renamed)

    # a gate that only drives one output with no register writes the port itself
    direct = {}
    for o in g.outputs:
        u = g.nodes[o].args[0]
        if g.nodes[u].kind in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF) and len(fan[u]) == 1 \
                and fan[u][0][2] == 0:
            direct[u] = o

    order = g.topo_order()
    for nid in order:
        n = g.nodes[nid]
        if n.kind in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF):
            if nid in direct:
                wire[nid] = port_of[direct[nid]]
            else:
                wire[nid] = take(g.wire_name(nid))
                m.wires.append(wire[nid])
        elif n.kind == Kind.CONST0:
            wire[nid] = "1'b0"
        elif n.kind == Kind.CONST1:
            wire[nid] = "1'b1"

    tap: dict[tuple[int, int], str] = {}
    for nid in order:
        n = g.nodes[nid]
        if n.kind == Kind.OUTPUT or n.kind in CONSTS:
            continue
        tap[(nid, 0)] = wire[nid]
        prev = wire[nid]
        base = g.wire_name(nid)
        for k in range(1, max((r for _, _, r in fan[nid]), default=0) + 1):
            q = take(f"{base}_r{k}")
            m.flops.append((q, prev))
            tap[(nid, k)] = q
            prev = q

    def ref(nid: int, k: int) -> str:
        if g.nodes[nid].kind in CONSTS:
            return wire[nid]
        return tap[(nid, k)]

    for nid in order:
        n = g.nodes[nid]
        if n.kind not in (Kind.AND, Kind.XOR, Kind.NOT, Kind.BUF):
            continue
        ops = [ref(a, net.edge_regs(nid, p)) for p, a in enumerate(n.args)]
        rhs = {Kind.AND: lambda: f"{ops[0]} & {ops[1]}", Kind.XOR: lambda: f"{ops[0]} ^ {ops[1]}",
               Kind.NOT: lambda: f"~{ops[0]}", Kind.BUF: lambda: ops[0]}[n.kind]()
        m.assigns.append((wire[nid], rhs))
        m.gate_assigns += 1
    for o in g.outputs:
        u = g.nodes[o].args[0]
        if u in direct:
            continue
        m.assigns.append((port_of[o], ref(u, net.edge_regs(o, 0))))
    if renamed:
        log.warning("renamed identifiers for Verilog: %s", ", ".join(f"{a}->{b}" for a, b in renamed.items()))
    return m


def emit_verilog(net: PipelinedNetlist, module_name: str = "top") -> str:
    """Verilog-2001 text: continuous assigns for gates, one clocked process per flop."""
    return build_verilog_module(net, module_name).render()
