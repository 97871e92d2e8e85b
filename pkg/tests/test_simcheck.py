import numpy as np
import pytest

from maskpipe.benchmarks import PRESENT_SBOX, present_sbox
from maskpipe.dfg import Dfg, Kind
from maskpipe.frontend import parse_masked_c
from maskpipe.gadgets import apply_masking_pass
from maskpipe.netlist import PipelinedNetlist, zero_netlist
from maskpipe.retimer import retime
from maskpipe.simcheck import (StepSimulator, check_balance, check_equivalence, exhaustive_vectors,
                               naive_balance, random_vectors, savings, simulate)

from helpers import path_register_sums, random_circuit


def test_domand_pipelined_stream(domand):
    net = retime(domand).netlist
    X = random_vectors(5, 64, seed=3)
    tr = simulate(net, X)
    want = domand.evaluate({s: X[:, j] for j, s in enumerate(domand.input_names)})
    for name in domand.output_names:
        assert (tr.output(name)[1:] == want[name][:-1]).all()


def test_held_inputs_settle(domand):
    net = retime(domand).netlist
    X = np.repeat(exhaustive_vectors(5)[[7]], 2, axis=0)
    tr = simulate(net, X)
    want = domand.evaluate({s: X[0, j] for j, s in enumerate(domand.input_names)})
    assert [bool(tr.output(o)[1]) for o in domand.output_names] == [bool(want[o]) for o in domand.output_names]


def test_step_simulator_agrees(motivating):
    for net in (retime(motivating).netlist, naive_balance(motivating)):
        X = random_vectors(8, 50, seed=9)
        assert (simulate(net, X).outputs == StepSimulator(net).run(X).outputs).all()


def test_present_dom_stream_recombines():
    plain = present_sbox()
    g = apply_masking_pass(plain, "dom")
    net = retime(g).netlist
    rng = np.random.default_rng(5)
    T = 200
    nib = rng.integers(0, 16, T)
    mask = rng.integers(0, 16, T)
    cols = {}
    for i in range(4):
        b = (nib >> i) & 1
        m = (mask >> i) & 1
        cols[f"x{i}_0"] = (b ^ m).astype(bool)
        cols[f"x{i}_1"] = m.astype(bool)
    for r in g.meta["masking"]["randoms"]:
        cols[r] = rng.integers(0, 2, T).astype(bool)
    tr = simulate(net, cols)
    L = net.latency
    y = sum((tr.output(f"y{i}_0") ^ tr.output(f"y{i}_1")).astype(int) << i for i in range(4))
    assert y[L:].tolist() == [PRESENT_SBOX[v] for v in nib[:T - L]]


def test_equivalence_exhaustive_and_identity(domand):
    rep = check_equivalence(retime(domand).netlist, domand)
    assert rep.equivalent and rep.exhaustive and rep.trials == 32
    g = Dfg("id")
    g.add_output("y", g.add_input("x"))
    rep = check_equivalence(zero_netlist(g), g)
    assert rep.equivalent and rep.latency == 0


def test_fault_injection_detected(domand):
    net = retime(domand).netlist.copy()
    key = next(k for k, v in sorted(net.regs.items()) if v)
    net.regs[key] = 0
    rep = check_equivalence(net, domand)
    assert not rep.equivalent and rep.mismatch_count > 0
    assert {"cycle", "wire", "expected", "got"} <= set(rep.mismatches[0])


def test_balance_witness(motivating):
    net = retime(motivating).netlist.copy()
    key = next(k for k, v in sorted(net.regs.items()) if v)
    net.regs[key] = 0
    rep = check_balance(net)
    assert not rep.balanced and len(rep.witness["paths"]) == 2


@pytest.mark.parametrize("seed", range(40))
def test_balance_agrees_with_path_enumeration(seed):
    g = random_circuit(np.random.default_rng(seed), max_nodes=20)
    rng = np.random.default_rng(seed + 1000)
    net = PipelinedNetlist(g, {(n.id, p): int(rng.integers(0, 2)) for n in g.nodes.values()
                              for p in range(len(n.args))})
    sums = path_register_sums(net)
    rep = check_balance(net)
    assert rep.balanced == (len(sums) == 1)
    if rep.balanced:
        assert rep.latency == next(iter(sums))


def test_naive_motivating(motivating):
    n = naive_balance(motivating)
    assert (n.register_count(), n.latency) == (12, 2)
    assert check_balance(n).balanced and check_equivalence(n, motivating).equivalent


def test_naive_without_annotations():
    g = parse_masked_c("int f(bool a, bool b, bool *y) { *y = a & b; }")
    n = naive_balance(g)
    assert n.register_count() == 0 and n.latency == 0


def test_savings():
    assert savings(168, 52) == pytest.approx(69.05, abs=0.01)
    assert savings(0, 0) == 0.0


def test_input_width_checked(domand):
    with pytest.raises(ValueError):
        simulate(retime(domand).netlist, np.zeros((3, 4), dtype=bool))
