import numpy as np
import pytest

from maskpipe.benchmarks import present_sbox
from maskpipe.dfg import Dfg, Kind, validate_dfg
from maskpipe.frontend import parse_masked_c
from maskpipe.gadgets import (GadgetKind, annotation_count, apply_masking_pass, random_arity,
                              template)
from maskpipe.simcheck import check_recombination, exhaustive_vectors, share_separation_violations

ALL = list(GadgetKind)


def recombines(kind) -> bool:
    """c0 ^ c1 == (a0 ^ a1) & (b0 ^ b1) over every share and random assignment."""
    t = template(kind)
    X = exhaustive_vectors(len(t.inputs))
    cols = {s: X[:, j] for j, s in enumerate(t.input_names)}
    out = t.evaluate(cols)
    want = (cols["a0"] ^ cols["a1"]) & (cols["b0"] ^ cols["b1"])
    return bool(((out["c0"] ^ out["c1"]) == want).all())


@pytest.mark.parametrize("kind", ALL)
def test_template_recombination(kind):
    assert recombines(kind)


@pytest.mark.parametrize("kind,ann,rnd", [("dom", 2, 1), ("hpc1", 4, 2), ("hpc2", 6, 1), ("comar", 7, 6)])
def test_template_shape(kind, ann, rnd):
    assert annotation_count(kind) == ann
    assert random_arity(kind) == rnd
    assert validate_dfg(template(kind)) == []


@pytest.mark.parametrize("kind", ALL)
def test_masking_preserves_function(kind):
    plain = present_sbox()
    masked = apply_masking_pass(plain, kind)
    rep = check_recombination(masked, plain, trials=20_000, seed=1)
    assert rep.correct
    assert len(masked.annotated_nodes()) == 8 * annotation_count(kind)


@pytest.mark.parametrize("kind", ALL)
def test_no_register_free_cone_mixes_shares(kind):
    masked = apply_masking_pass(present_sbox(), kind)
    assert share_separation_violations(masked) == []


def test_unprotected_and_mixes_shares():
    # a naive share-wise product recombines both shares in one cone
    g = Dfg("bad")
    a0, a1, b0, b1 = (g.add_input(s) for s in ("a_0", "a_1", "b_0", "b_1"))
    t = g.add_gate(Kind.AND, g.add_gate(Kind.XOR, a0, a1), b0)
    g.add_output("y_0", t)
    g.add_output("y_1", b1)
    g.meta["masking"] = {"inputs": {"a": ["a_0", "a_1"], "b": ["b_0", "b_1"]}}
    assert share_separation_violations(g)


def test_port_naming_and_order():
    g = parse_masked_c("int f(bool a, bool b, bool *y) { *y = a & b; }")
    m = apply_masking_pass(g, "dom")
    assert m.input_names == ["a_0", "a_1", "b_0", "b_1", "rnd0"]
    assert m.output_names == ["y_0", "y_1"]
    assert m.meta["masking"]["outputs"] == {"y": ["y_0", "y_1"]}


def test_not_and_constants():
    g = parse_masked_c("int f(bool a, bool b, bool *y, bool *z) { *y = ~(a & 1); *z = b ^ 0; }")
    m = apply_masking_pass(g, "hpc2")
    assert check_recombination(m, g).correct


def test_comar_shared_randoms():
    m = apply_masking_pass(present_sbox(), "comar", share_all_randoms=True)
    assert len(m.meta["masking"]["randoms"]) == random_arity("comar")
    m2 = apply_masking_pass(present_sbox(), "dom", share_all_randoms=True)
    assert len(m2.meta["masking"]["randoms"]) == 8


def test_rejects_annotated_input(domand):
    with pytest.raises(ValueError):
        apply_masking_pass(domand, "dom")


def test_gadget_kind_parse():
    assert GadgetKind.parse("Hpc1") is GadgetKind.HPC1
    with pytest.raises(ValueError):
        GadgetKind.parse("isw")
