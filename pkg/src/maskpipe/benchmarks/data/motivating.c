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
