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
