"""Boolean circuits used as benchmarks and fixtures.

* PRESENT S-box from its algebraic normal form: five quadratic monomials and
  three cubic ones, each cubic monomial being ``x0`` times a quadratic one,
  8 ANDs in total.
* AES S-box through the GF(2^8)/GF(2^4)/GF(2^2) tower: inversion costs
  36 ANDs (3 per GF(2^2) product, 9 per GF(2^4) product or inverse), and
  both basis changes are plain XOR networks.
* The small motivating circuit with four annotated gates and DOMAND.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from ..dfg import Dfg, Kind

PRESENT_SBOX = (0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD, 0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2)


class Builder:
    """Small helper for writing circuits in Python."""

    def __init__(self, name: str):
        self.g = Dfg(name)

    def input(self, name: str) -> int:
        return self.g.add_input(name)

    def output(self, name: str, w: int) -> int:
        return self.g.add_output(name, w)

    def and_(self, a: int, b: int, name: str | None = None, reg: bool = False) -> int:
        return self.g.add_gate(Kind.AND, a, b, name=name, annotated=reg)

    def xor(self, a: int, b: int, name: str | None = None, reg: bool = False) -> int:
        return self.g.add_gate(Kind.XOR, a, b, name=name, annotated=reg)

    def not_(self, a: int, name: str | None = None) -> int:
        return self.g.add_gate(Kind.NOT, a, name=name)

    def xor_all(self, ws: Sequence[int], name: str | None = None) -> int:
        """Left-to-right XOR chain; the last gate gets ``name``."""
        if not ws:
            return self.g.add_const(0)
        acc = ws[0]
        for i, w in enumerate(ws[1:]):
            acc = self.xor(acc, w, name if i == len(ws) - 2 else None)
        return acc

    def linear(self, bits: Sequence[int], matrix: np.ndarray) -> list[int]:
        """``out[i] = XOR of bits[j] for matrix[i, j] == 1`` (no sharing)."""
        return [self.xor_all([bits[j] for j in np.nonzero(row)[0]]) for row in matrix]


# -- PRESENT ------------------------------------------------------------------

PRESENT_SOURCE = """\
// PRESENT S-box, input x3..x0 (x0 is the least significant bit).
// Algebraic normal form with the cubic monomials factored through x0:
// five quadratic and three cubic products, 8 ANDs.
int present_sbox(bool x0, bool x1, bool x2, bool x3, bool *y0, bool *y1, bool *y2, bool *y3)
{
    q12 = x1 & x2;
    q13 = x1 & x3;
    q23 = x2 & x3;
    q01 = x0 & x1;
    q03 = x0 & x3;
    c012 = x0 & q12;
    c013 = x0 & q13;
    c023 = x0 & q23;
    *y0 = x0 ^ x2 ^ q12 ^ x3;
    *y1 = x1 ^ x3 ^ q13 ^ q23 ^ c012 ^ c013 ^ c023;
    *y2 = ~(q01 ^ x2 ^ x3 ^ q03 ^ q13 ^ c013 ^ c023);
    *y3 = ~(x0 ^ x1 ^ q12 ^ c012 ^ x3 ^ c013 ^ c023);
    return 0;
}
"""


def present_sbox() -> Dfg:
    from ..frontend import parse_masked_c

    return parse_masked_c(PRESENT_SOURCE)


# -- GF arithmetic on integers (reference model for the AES circuit) ---------

def gf4_mul(a: int, b: int) -> int:
    """GF(4) = GF(2)[W]/(W^2 + W + 1), element a1*W + a0 stored as (a1 << 1) | a0."""
    a1, a0, b1, b0 = a >> 1, a & 1, b >> 1, b & 1
    hi = (a1 & b1) ^ (a1 & b0) ^ (a0 & b1)
    lo = (a1 & b1) ^ (a0 & b0)
    return (hi << 1) | lo


def _ext_mul(mul, bits: int, c: int):
    """Multiplication in F[X]/(X^2 + X + c) over a subfield with ``bits``-bit elements."""
    mask = (1 << bits) - 1

    def f(a: int, b: int) -> int:
        ah, al, bh, bl = a >> bits, a & mask, b >> bits, b & mask
        ph, pl = mul(ah, bh), mul(al, bl)
        pm = mul(ah ^ al, bh ^ bl)
        return ((pm ^ pl) << bits) | (mul(ph, c) ^ pl)

    return f


def _irreducible(mul, size: int, c: int) -> bool:
    return all(mul(x, x) ^ x ^ c for x in range(size))


@lru_cache(maxsize=None)
def tower_constants() -> tuple[int, int]:
    """Smallest lambda in GF(4) and mu in GF(16) giving irreducible X^2 + X + c."""
    lam = next(c for c in range(1, 4) if _irreducible(gf4_mul, 4, c))
    m16 = _ext_mul(gf4_mul, 2, lam)
    mu = next(c for c in range(1, 16) if _irreducible(m16, 16, c))
    return lam, mu


def gf16_mul(a: int, b: int) -> int:
    return _ext_mul(gf4_mul, 2, tower_constants()[0])(a, b)


def gf256t_mul(a: int, b: int) -> int:
    return _ext_mul(gf16_mul, 4, tower_constants()[1])(a, b)


def aes_mul(a: int, b: int) -> int:
    """Multiplication modulo x^8 + x^4 + x^3 + x + 1."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return r


def _pow(mul, a: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = mul(r, a)
        a = mul(a, a)
        e >>= 1
    return r


@lru_cache(maxsize=None)
def aes_sbox_table() -> tuple[int, ...]:
    """S-box from the definition: inverse in GF(2^8) (0 -> 0) then the affine map."""
    out = []
    for x in range(256):
        inv = _pow(aes_mul, x, 254)
        s = inv
        for k in range(1, 5):
            s ^= ((inv << k) | (inv >> (8 - k))) & 0xFF
        out.append(s ^ 0x63)
    return tuple(out)


def _bits_matrix(f, n_in: int, n_out: int) -> np.ndarray:
    """Matrix of a GF(2)-linear map given as a function on integers."""
    m = np.zeros((n_out, n_in), dtype=np.uint8)
    for j in range(n_in):
        y = f(1 << j)
        for i in range(n_out):
            m[i, j] = (y >> i) & 1
    return m


def _gf2_inv(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    a = np.concatenate([m.copy() % 2, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r, col])
        a[[col, piv]] = a[[piv, col]]
        for r in range(n):
            if r != col and a[r, col]:
                a[r] ^= a[col]
    return a[:, n:]


@lru_cache(maxsize=None)
def basis_change() -> tuple[np.ndarray, np.ndarray]:
    """(into tower, out of tower) matrices for the field isomorphism.

    ``beta`` is the smallest tower element that is a root of the AES
    polynomial; the map sends x^i to beta^i.
    """
    def aes_poly(b: int) -> int:
        p = lambda e: _pow(gf256t_mul, b, e)
        return p(8) ^ p(4) ^ p(3) ^ b ^ 1

    beta = next(b for b in range(2, 256) if aes_poly(b) == 0)
    powers = [_pow(gf256t_mul, beta, i) for i in range(8)]
    into = np.zeros((8, 8), dtype=np.uint8)
    for i, p in enumerate(powers):
        for r in range(8):
            into[r, i] = (p >> r) & 1
    return into, _gf2_inv(into)


def _affine_matrix() -> np.ndarray:
    def f(x: int) -> int:
        s = x
        for k in range(1, 5):
            s ^= ((x << k) | (x >> (8 - k))) & 0xFF
        return s

    return _bits_matrix(f, 8, 8)


# -- AES circuit -----------------------------------------------------------------

class _Tower:
    """Emits tower-field arithmetic as gates; elements are lists of wires, LSB first."""

    def __init__(self, b: Builder):
        self.b = b
        self.lam, self.mu = tower_constants()
        self.ands = 0

    def lin(self, bits, f, n: int):
        return self.b.linear(bits, _bits_matrix(f, n, n))

    def add(self, x, y):
        return [self.b.xor(a, c) for a, c in zip(x, y)]

    def mul4(self, x, y):
        a0, a1 = x
        b0, b1 = y
        m1 = self.b.and_(a1, b1)
        m0 = self.b.and_(a0, b0)
        mm = self.b.and_(self.b.xor(a1, a0), self.b.xor(b1, b0))
        self.ands += 3
        return [self.b.xor(m1, m0), self.b.xor(mm, m0)]

    def mul16(self, x, y):
        xl, xh, yl, yh = x[:2], x[2:], y[:2], y[2:]
        ph = self.mul4(xh, yh)
        pl = self.mul4(xl, yl)
        pm = self.mul4(self.add(xh, xl), self.add(yh, yl))
        lam_ph = self.lin(ph, lambda v: gf4_mul(v, self.lam), 2)
        return self.add(lam_ph, pl) + self.add(pm, pl)

    def inv16(self, x):
        xl, xh = x[:2], x[2:]
        # delta = lam*xh^2 + xh*xl + xl^2, then x^-1 = (xh*d^-1) X + (xh+xl)*d^-1
        cross = self.mul4(xh, xl)
        sq = self.b.linear(xh + xl, _bits_matrix(
            lambda v: gf4_mul(self.lam, gf4_mul(v >> 2, v >> 2)) ^ gf4_mul(v & 3, v & 3), 4, 2)
            [:, [2, 3, 0, 1]])
        delta = self.add(sq, cross)
        dinv = self.lin(delta, lambda v: gf4_mul(v, v), 2)
        hi = self.mul4(xh, dinv)
        lo = self.mul4(self.add(xh, xl), dinv)
        return lo + hi

    def inv256(self, x):
        xl, xh = x[:4], x[4:]
        cross = self.mul16(xh, xl)
        sq = self.b.linear(xh + xl, _bits_matrix(
            lambda v: gf16_mul(self.mu, gf16_mul(v >> 4, v >> 4)) ^ gf16_mul(v & 15, v & 15), 8, 4)
            [:, [4, 5, 6, 7, 0, 1, 2, 3]])
        delta = self.add(sq, cross)
        dinv = self.inv16(delta)
        hi = self.mul16(xh, dinv)
        lo = self.mul16(self.add(xh, xl), dinv)
        return lo + hi


def aes_sbox() -> Dfg:
    """AES S-box over the tower field: 36 ANDs, constant 0x63 folded into NOTs."""
    b = Builder("aes_sbox")
    x = [b.input(f"x{i}") for i in range(8)]
    into, out_of = basis_change()
    t = _Tower(b)
    xt = b.linear(x, into)
    inv = t.inv256(xt)
    assert t.ands == 36
    y = b.linear(inv, (_affine_matrix() @ out_of) % 2)
    for i in range(8):
        w = b.not_(y[i]) if (0x63 >> i) & 1 else y[i]
        b.output(f"y{i}", w)
    return b.g


# -- fixtures ------------------------------------------------------------------

DOMAND_SOURCE = """\
int domand (bool a0, bool a1, bool b0, bool b1, bool r01, bool *i1, bool *i2, bool z, bool *y0, bool *y1)
{
    p2 = a0 * b1;
    i1 = p2 ^ z;
    p3 = a1 * b0;
    i2 = p3 ^ z;
    p1 = a0 * b0;
    p4 = a1 * b1;
    *y0 = *i1 ^ p1;
    *y1 = *i2 ^ p4;
    return 0;
}
"""

# DOM register positions on the cross-domain sums only; balancing adds the rest
DOMAND_ANNOTATED = DOMAND_SOURCE.replace("i1 = p2 ^ z;", "i1 = reg(p2 ^ z);") \
    .replace("i2 = p3 ^ z;", "i2 = reg(p3 ^ z);")

DOMAND_BALANCED = """\
int domand (bool a0, bool a1, bool b0, bool b1, bool z, bool *i1, bool *i2,
            bool *y0, bool *y1)
{
    p2 = a0 * b1;
    i1 = reg(p2 ^ z);
    p3 = a1 * b0;
    i2 = reg(p3 ^ z);
    p1 = reg(a0 * b0);
    p4 = reg(a1 * b1);
    *y0 = *i1 ^ p1;
    *y1 = *i2 ^ p4;
    return 0;
}
"""

MOTIVATING_SOURCE = """\
// Eight first-level gates g1..g8 over a ring of inputs, four second-level
// gates h9..h12 pairing them, two outputs.  Gates 4, 5, 9 and 12 carry
// register annotations.
int motivating(bool x1, bool x2, bool x3, bool x4, bool x5, bool x6, bool x7, bool x8,
               bool *o1, bool *o2)
{
    g1 = x1 & x2;
    g2 = x2 & x3;
    g3 = x3 & x4;
    g4 = reg(x4 & x5);
    g5 = reg(x5 & x6);
    g6 = x6 & x7;
    g7 = x7 & x8;
    g8 = x8 & x1;
    h9 = reg(g1 ^ g2);
    h10 = g3 ^ g4;
    h11 = g5 ^ g6;
    h12 = reg(g7 ^ g8);
    *o1 = h9 ^ h10;
    *o2 = h11 ^ h12;
    return 0;
}
"""

AND2_SOURCE = """\
int and2(bool a, bool b, bool *y)
{
    *y = a & b;
    return 0;
}
"""
