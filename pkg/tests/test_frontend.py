import json

import numpy as np
import pytest

from maskpipe.benchmarks import DOMAND_SOURCE, PRESENT_SBOX, PRESENT_SOURCE
from maskpipe.dfg import Kind
from maskpipe.errors import ParseError, ValidationError
from maskpipe.frontend import load_dfg, parse_json_netlist, parse_masked_c


def test_domand_ports_and_names():
    g = parse_masked_c(DOMAND_SOURCE)
    assert g.input_names == ["a0", "a1", "b0", "b1", "z"]
    assert g.output_names == ["y0", "y1"]
    names = [g.nodes[i].name for i in g.topo_order() if g.nodes[i].kind in (Kind.AND, Kind.XOR)]
    assert sorted(names) == sorted(["p2", "i1", "p3", "i2", "p1", "p4", "y0", "y1"])
    assert g.annotated_nodes() == []


def test_reg_marks_annotation():
    g = parse_masked_c("int f(bool a, bool b, bool *y) { t = reg(a & b); *y = t ^ a; return 0; }")
    (t,) = g.annotated_nodes()
    assert g.nodes[t].name == "t" and g.nodes[t].kind == Kind.AND


def test_reg_of_identifier_is_buffer():
    g = parse_masked_c("int f(bool a, bool *y) { *y = reg(a); }")
    (t,) = g.annotated_nodes()
    assert g.nodes[t].kind == Kind.BUF


def test_present_source_matches_table():
    g = parse_masked_c(PRESENT_SOURCE)
    x = np.arange(16)
    out = g.evaluate({f"x{i}": (x >> i) & 1 for i in range(4)})
    got = sum(out[f"y{i}"].astype(int) << i for i in range(4))
    assert got.tolist() == list(PRESENT_SBOX)
    assert g.op_counts()[Kind.AND] == 8


@pytest.mark.parametrize("src,msg", [
    ("int f(bool a, bool *y) { if (a) *y = a; }", "if"),
    ("int f(bool a, bool *y) { *y = a + a; }", "unsupported"),
    ("int f(bool a, bool *y) { *y = a[0]; }", "unsupported"),
    ("int f(bool a, bool *y) { *y = g(a); }", "call"),
    ("int f(bool a, bool *y) { *y = reg(reg(a)); }", "reg"),
    ("int f(bool a, bool *y) { *y = 2; }", "literal"),
    ("int f(bool a, bool *y) { /* open ", "comment"),
])
def test_unsupported_constructs(src, msg):
    with pytest.raises(ParseError) as e:
        parse_masked_c(src)
    assert msg in str(e.value).lower()


def test_parse_error_has_position():
    with pytest.raises(ParseError) as e:
        parse_masked_c("int f(bool a, bool *y)\n{\n    *y = a + a;\n}")
    assert e.value.line == 3


@pytest.mark.parametrize("src", [
    "int f(bool a, bool *y) { a = 1; *y = a; }",
    "int f(bool a, bool *y) { *y = a; *y = ~a; }",
    "int f(bool a, bool *y) { *y = q; }",
    "int f(bool a, bool *y) { t = a; }",
])
def test_semantic_errors(src):
    with pytest.raises(ParseError):
        parse_masked_c(src)


def test_json_netlist_roundtrip(tmp_path):
    g = parse_masked_c(DOMAND_SOURCE)
    p = tmp_path / "d.json"
    p.write_text(g.to_json_text())
    h = load_dfg(p)
    assert h.to_json() == g.to_json()


def test_bad_json_is_parse_error():
    with pytest.raises(ParseError):
        parse_json_netlist("{\"nodes\": [{\"id\": 0, \"kind\": \"WHAT\"}]}")


def test_load_validates(tmp_path):
    g = parse_masked_c(DOMAND_SOURCE).to_json()
    g["nodes"].append({"id": 999, "kind": "NOT", "args": [0], "reg": False})
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(g))
    with pytest.raises(ValidationError):
        load_dfg(p)
