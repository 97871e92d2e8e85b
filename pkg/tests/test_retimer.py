import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maskpipe.errors import ConstraintViolation, NegativeCycle
from maskpipe.hlsmodel import build_hls_model
from maskpipe.retimer import (INF, ConstraintKind, DiffConstraint, RetimingSolution, apply_retiming,
                              compute_wd, gen_constraints, retime, solve_constraints)
from maskpipe.simcheck import check_balance

from helpers import brute_feasible, brute_wd, floyd_labels, random_circuit


def test_domand_labels_and_registers(domand):
    r = retime(domand)
    lab = dict(zip(r.model.names, r.solution.labels.tolist()))
    assert lab["source"] == 0 and lab["sink"] == -1
    assert lab["d1"] == lab["d2"] == lab["y0"] == lab["y1"] == -1
    assert r.netlist.registered_wires() == ["i1", "i2", "p1", "p4"]
    assert r.netlist.latency == 1


def test_wd_matches_path_enumeration(motivating):
    m = build_hls_model(motivating)
    wd = compute_wd(m)
    W, D = brute_wd(m)
    for (u, v), w in W.items():
        if u != v:
            assert (int(wd.W[u, v]), int(wd.D[u, v])) == (w, D[(u, v)])
    unreachable = [(u, v) for u in range(m.n) for v in range(m.n) if u != v and (u, v) not in W]
    assert all(wd.W[u, v] >= INF for u, v in unreachable)


def test_constraint_kinds_and_dedup(domand):
    m = build_hls_model(domand)
    cs = gen_constraints(m, compute_wd(m))
    edges = set(zip(m.dst.tolist(), m.src.tolist(), m.weight.tolist()))
    fc = cs.of_kind(ConstraintKind.FEASIBILITY)
    assert set(zip(fc.lhs.tolist(), fc.rhs.tolist(), fc.bound.tolist())) == edges
    keys = list(zip(cs.lhs.tolist(), cs.rhs.tolist(), cs.bound.tolist()))
    assert len(keys) == len(set(keys))


def test_clock_relaxes_critical_paths(domand):
    m = build_hls_model(domand)
    wd = compute_wd(m)
    tight = gen_constraints(m, wd, 1)
    loose = gen_constraints(m, wd, 5)
    assert len(loose.of_kind(ConstraintKind.CRITICAL_PATH)) == 0
    assert len(tight.of_kind(ConstraintKind.CRITICAL_PATH)) > 0


def test_negative_cycle_reported():
    cs = [DiffConstraint(0, 1, -1), DiffConstraint(1, 2, 0), DiffConstraint(2, 0, 0)]
    with pytest.raises(NegativeCycle) as e:
        solve_constraints(cs, 3)
    assert e.value.cycle is not None and len(e.value.cycle) == 3


def test_apply_rejects_bad_labels(domand):
    r = retime(domand)
    bad = RetimingSolution(np.zeros(r.model.n, dtype=np.int64))
    with pytest.raises(ConstraintViolation):
        apply_retiming(r.model, bad, r.constraints)
    with pytest.raises(ConstraintViolation):
        apply_retiming(r.model, bad)


constraint_systems = st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-2, 2)),
             min_size=1, max_size=10)))


@settings(max_examples=300, deadline=None)
@given(constraint_systems)
def test_solver_agrees_with_independent_oracles(system):
    n, raw = system
    lines = [(a, b, k) for a, b, k in raw if a != b]
    cs = [DiffConstraint(a, b, k) for a, b, k in lines]
    want = floyd_labels(lines, n)
    if want is None:
        with pytest.raises(NegativeCycle):
            solve_constraints(cs, n)
        assert not brute_feasible(lines, n, lo=-2 * n)
        return
    sol = solve_constraints(cs, n)
    assert all(c.holds(sol.labels) for c in cs)
    assert sol.labels.tolist() == want.tolist()
    assert (sol.labels <= 0).all()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_retimed_output_balanced(seed):
    g = random_circuit(np.random.default_rng(seed), max_nodes=25, consts=True)
    r = retime(g)
    assert check_balance(r.netlist).balanced
    assert r.netlist.annotations_met() == []


def test_retime_deterministic(motivating):
    a, b = retime(motivating), retime(motivating)
    assert a.constraints.lines() == b.constraints.lines()
    assert a.netlist.regs == b.netlist.regs
