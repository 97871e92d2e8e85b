int and2(bool a, bool b, bool *y)
{
    *y = a & b;
    return 0;
}
