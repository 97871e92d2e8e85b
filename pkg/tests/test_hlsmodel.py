import pytest

from maskpipe.dfg import Dfg, Kind
from maskpipe.errors import ValidationError
from maskpipe.hlsmodel import DUMMY, E_BACK, E_LOCK, LOCK_IN, build_hls_model, max_extra_regs
from maskpipe.frontend import parse_masked_c

from helpers import enumerate_paths_annotated


def test_domand_model(domand):
    m = build_hls_model(domand)
    assert m.names == ["source", "sink", "p2", "i1", "d1", "p3", "i2", "d2", "p1", "p4", "y0", "y1"]
    assert m.back_weight == 1
    assert m.locks == []
    assert int(m.delay[m.idx("i1")]) == 1 and int(m.delay[m.idx("d1")]) == 1
    assert int(m.delay[m.idx("p1")]) == 0
    assert sum(1 for r in m.roles if r == DUMMY) == 2


def test_lock_pairs_only_before_annotated_descendants():
    g = parse_masked_c("""int f(bool a, bool b, bool *y) {
        s = reg(a & b);
        t = reg(s ^ a);
        *y = t ^ b;
    }""")
    m = build_hls_model(g)
    assert len(m.locks) == 1
    ri, ro = m.locks[0]
    assert m.roles[ri] == LOCK_IN
    e = [i for i in range(m.n_edges) if m.ekind[i] == E_LOCK]
    assert len(e) == 1 and int(m.weight[e[0]]) == 1
    assert m.back_weight == 2


def test_back_edge(motivating):
    m = build_hls_model(motivating)
    (b,) = [i for i in range(m.n_edges) if m.ekind[i] == E_BACK]
    assert (int(m.src[b]), int(m.dst[b])) == (m.sink, m.source)
    assert max_extra_regs(m) == enumerate_paths_annotated(motivating) == 1


def test_rejects_bad_input():
    g = Dfg("empty")
    g.add_input("a")
    with pytest.raises(ValidationError):
        build_hls_model(g)
    with pytest.raises(ValueError):
        build_hls_model(parse_masked_c("int f(bool a, bool *y) { *y = ~a; }"), c=0)


def test_dot_output(domand):
    dot = build_hls_model(domand).to_dot()
    assert dot.startswith("digraph") and "d1" in dot
