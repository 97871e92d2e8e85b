import numpy as np
import pytest

from maskpipe.dfg import CycleError, Dfg, Kind, isomorphic, validate_dfg


def small():
    g = Dfg("t")
    a, b = g.add_input("a"), g.add_input("b")
    x = g.add_gate(Kind.AND, a, b, name="x", annotated=True)
    y = g.add_gate(Kind.XOR, x, a)
    g.add_output("y", y)
    return g


def test_evaluate_truth_table():
    g = small()
    out = g.evaluate({"a": np.array([0, 0, 1, 1]), "b": np.array([0, 1, 0, 1])})
    assert out["y"].tolist() == [False, False, True, False]


def test_json_roundtrip():
    g = small()
    h = Dfg.from_json(g.to_json_text())
    assert h.to_json() == g.to_json()
    assert isomorphic(g, h)


def test_validate_ok_and_dead_code():
    g = small()
    assert validate_dfg(g) == []
    g.add_gate(Kind.NOT, g.inputs[0])
    assert [d.code for d in validate_dfg(g)] == ["dead-code"]


def test_validate_arity_and_annotation():
    g = small()
    g.nodes[g.inputs[0]].annotated = True
    codes = {d.code for d in validate_dfg(g)}
    assert "annotation" in codes


def test_cycle_detected():
    g = small()
    x = g.node_by_name("x")
    y = g.nodes[g.outputs[0]].args[0]
    g.nodes[x.id].args = (y, g.inputs[1])
    with pytest.raises(CycleError):
        g.topo_order()
    assert "cycle" in {d.code for d in validate_dfg(g)}


def test_isomorphic_detects_operand_swap():
    g = small()
    h = g.copy()
    y = h.nodes[h.outputs[0]].args[0]
    h.nodes[y].args = tuple(reversed(h.nodes[y].args))
    assert not isomorphic(g, h)


def test_isomorphic_ignores_annotations():
    g = small()
    h = g.copy()
    for n in h.nodes.values():
        n.annotated = False
    assert isomorphic(g, h)


def test_from_json_rejects_unknown_port():
    data = small().to_json()
    data["outputs"] = ["nope"]
    with pytest.raises(ValueError):
        Dfg.from_json(data)
