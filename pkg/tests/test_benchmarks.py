import numpy as np
import pytest

from maskpipe.benchmarks import PRESENT_SBOX, aes_sbox, aes_sbox_table, present_sbox
from maskpipe.benchmarks.circuits import aes_mul, gf16_mul, gf256t_mul, tower_constants
from maskpipe.benchmarks.corpus import generate, masked_dfg, shipped_names, shipped_source
from maskpipe.dfg import Kind, isomorphic
from maskpipe.frontend import parse_masked_c


def lookup(g, bits):
    x = np.arange(1 << bits)
    out = g.evaluate({f"x{i}": ((x >> i) & 1).astype(bool) for i in range(bits)})
    return sum(out[f"y{i}"].astype(int) << i for i in range(bits)).tolist()


def test_present_table():
    assert lookup(present_sbox(), 4) == list(PRESENT_SBOX)


def test_aes_table_known_values():
    t = aes_sbox_table()
    assert (t[0x00], t[0x01], t[0x53], t[0xFF]) == (0x63, 0x7C, 0xED, 0x16)
    assert sorted(t) == list(range(256))


def test_aes_circuit():
    g = aes_sbox()
    assert g.op_counts()[Kind.AND] == 36
    assert lookup(g, 8) == list(aes_sbox_table())


def test_tower_fields_are_fields():
    lam, mu = tower_constants()
    for mul, size in ((gf16_mul, 16), (gf256t_mul, 256)):
        for a in range(1, size):
            assert any(mul(a, b) == 1 for b in range(1, size))
    assert aes_mul(0x57, 0x83) == 0xC1


def test_shipped_corpus_has_no_drift():
    gen = generate()
    assert sorted(gen) == shipped_names()
    for name, text in gen.items():
        assert shipped_source(name) == text, name


@pytest.mark.parametrize("bench", ["present", "aes"])
@pytest.mark.parametrize("kind", ["dom", "hpc1", "hpc2", "comar"])
def test_shipped_masked_sources_parse_back(bench, kind):
    assert isomorphic(parse_masked_c(shipped_source(f"{bench}_{kind}_masked")), masked_dfg(bench, kind))
