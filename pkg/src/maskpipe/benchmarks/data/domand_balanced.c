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
