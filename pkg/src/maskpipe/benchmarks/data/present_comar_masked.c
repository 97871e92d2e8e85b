int present_comar(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool rnd8, bool rnd9, bool rnd10, bool rnd11, bool rnd12, bool rnd13, bool rnd14, bool rnd15, bool rnd16, bool rnd17, bool rnd18, bool rnd19, bool rnd20, bool rnd21, bool rnd22, bool rnd23, bool rnd24, bool rnd25, bool rnd26, bool rnd27, bool rnd28, bool rnd29, bool rnd30, bool rnd31, bool rnd32, bool rnd33, bool rnd34, bool rnd35, bool rnd36, bool rnd37, bool rnd38, bool rnd39, bool rnd40, bool rnd41, bool rnd42, bool rnd43, bool rnd44, bool rnd45, bool rnd46, bool rnd47, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1)
{
    g0_ar0 = x1_0 ^ rnd0;
    g0_ar1 = x1_1 ^ rnd0;
    g0_br0 = reg(x2_0 ^ rnd1);
    g0_br1 = reg(x2_1 ^ rnd1);
    g0_s00 = reg((g0_ar0 * g0_br0) ^ rnd2);
    g0_s01 = reg((g0_ar0 * g0_br1) ^ rnd3);
    g0_s10 = reg((g0_ar1 * g0_br0) ^ rnd4);
    g0_s11 = reg((g0_ar1 * g0_br1) ^ rnd5);
    g0_c0 = ((g0_s00 ^ g0_s01) ^ g0_s10) ^ g0_s11;
    g0_c1 = reg(((rnd2 ^ rnd3) ^ rnd4) ^ rnd5);
    g1_ar0 = x1_0 ^ rnd6;
    g1_ar1 = x1_1 ^ rnd6;
    g1_br0 = reg(x3_0 ^ rnd7);
    g1_br1 = reg(x3_1 ^ rnd7);
    g1_s00 = reg((g1_ar0 * g1_br0) ^ rnd8);
    g1_s01 = reg((g1_ar0 * g1_br1) ^ rnd9);
    g1_s10 = reg((g1_ar1 * g1_br0) ^ rnd10);
    g1_s11 = reg((g1_ar1 * g1_br1) ^ rnd11);
    g1_c0 = ((g1_s00 ^ g1_s01) ^ g1_s10) ^ g1_s11;
    g1_c1 = reg(((rnd8 ^ rnd9) ^ rnd10) ^ rnd11);
    g2_ar0 = x2_0 ^ rnd12;
    g2_ar1 = x2_1 ^ rnd12;
    g2_br0 = reg(x3_0 ^ rnd13);
    g2_br1 = reg(x3_1 ^ rnd13);
    g2_s00 = reg((g2_ar0 * g2_br0) ^ rnd14);
    g2_s01 = reg((g2_ar0 * g2_br1) ^ rnd15);
    g2_s10 = reg((g2_ar1 * g2_br0) ^ rnd16);
    g2_s11 = reg((g2_ar1 * g2_br1) ^ rnd17);
    g2_c0 = ((g2_s00 ^ g2_s01) ^ g2_s10) ^ g2_s11;
    g2_c1 = reg(((rnd14 ^ rnd15) ^ rnd16) ^ rnd17);
    g3_ar0 = x0_0 ^ rnd18;
    g3_ar1 = x0_1 ^ rnd18;
    g3_br0 = reg(x1_0 ^ rnd19);
    g3_br1 = reg(x1_1 ^ rnd19);
    g3_s00 = reg((g3_ar0 * g3_br0) ^ rnd20);
    g3_s01 = reg((g3_ar0 * g3_br1) ^ rnd21);
    g3_s10 = reg((g3_ar1 * g3_br0) ^ rnd22);
    g3_s11 = reg((g3_ar1 * g3_br1) ^ rnd23);
    g3_c0 = ((g3_s00 ^ g3_s01) ^ g3_s10) ^ g3_s11;
    g3_c1 = reg(((rnd20 ^ rnd21) ^ rnd22) ^ rnd23);
    g4_ar0 = x0_0 ^ rnd24;
    g4_ar1 = x0_1 ^ rnd24;
    g4_br0 = reg(x3_0 ^ rnd25);
    g4_br1 = reg(x3_1 ^ rnd25);
    g4_s00 = reg((g4_ar0 * g4_br0) ^ rnd26);
    g4_s01 = reg((g4_ar0 * g4_br1) ^ rnd27);
    g4_s10 = reg((g4_ar1 * g4_br0) ^ rnd28);
    g4_s11 = reg((g4_ar1 * g4_br1) ^ rnd29);
    g4_c0 = ((g4_s00 ^ g4_s01) ^ g4_s10) ^ g4_s11;
    g4_c1 = reg(((rnd26 ^ rnd27) ^ rnd28) ^ rnd29);
    g5_ar0 = x0_0 ^ rnd30;
    g5_ar1 = x0_1 ^ rnd30;
    g5_br0 = reg(g0_c0 ^ rnd31);
    g5_br1 = reg(g0_c1 ^ rnd31);
    g5_s00 = reg((g5_ar0 * g5_br0) ^ rnd32);
    g5_s01 = reg((g5_ar0 * g5_br1) ^ rnd33);
    g5_s10 = reg((g5_ar1 * g5_br0) ^ rnd34);
    g5_s11 = reg((g5_ar1 * g5_br1) ^ rnd35);
    g5_c0 = ((g5_s00 ^ g5_s01) ^ g5_s10) ^ g5_s11;
    g5_c1 = reg(((rnd32 ^ rnd33) ^ rnd34) ^ rnd35);
    g6_ar0 = x0_0 ^ rnd36;
    g6_ar1 = x0_1 ^ rnd36;
    g6_br0 = reg(g1_c0 ^ rnd37);
    g6_br1 = reg(g1_c1 ^ rnd37);
    g6_s00 = reg((g6_ar0 * g6_br0) ^ rnd38);
    g6_s01 = reg((g6_ar0 * g6_br1) ^ rnd39);
    g6_s10 = reg((g6_ar1 * g6_br0) ^ rnd40);
    g6_s11 = reg((g6_ar1 * g6_br1) ^ rnd41);
    g6_c0 = ((g6_s00 ^ g6_s01) ^ g6_s10) ^ g6_s11;
    g6_c1 = reg(((rnd38 ^ rnd39) ^ rnd40) ^ rnd41);
    g7_ar0 = x0_0 ^ rnd42;
    g7_ar1 = x0_1 ^ rnd42;
    g7_br0 = reg(g2_c0 ^ rnd43);
    g7_br1 = reg(g2_c1 ^ rnd43);
    g7_s00 = reg((g7_ar0 * g7_br0) ^ rnd44);
    g7_s01 = reg((g7_ar0 * g7_br1) ^ rnd45);
    g7_s10 = reg((g7_ar1 * g7_br0) ^ rnd46);
    g7_s11 = reg((g7_ar1 * g7_br1) ^ rnd47);
    g7_c0 = ((g7_s00 ^ g7_s01) ^ g7_s10) ^ g7_s11;
    g7_c1 = reg(((rnd44 ^ rnd45) ^ rnd46) ^ rnd47);
    *y0_0 = ((x0_0 ^ x2_0) ^ g0_c0) ^ x3_0;
    *y0_1 = ((x0_1 ^ x2_1) ^ g0_c1) ^ x3_1;
    *y1_0 = (((((x1_0 ^ x3_0) ^ g1_c0) ^ g2_c0) ^ g5_c0) ^ g6_c0) ^ g7_c0;
    *y1_1 = (((((x1_1 ^ x3_1) ^ g1_c1) ^ g2_c1) ^ g5_c1) ^ g6_c1) ^ g7_c1;
    *y2_1 = (((((g3_c1 ^ x2_1) ^ x3_1) ^ g4_c1) ^ g1_c1) ^ g6_c1) ^ g7_c1;
    *y2_0 = ~((((((g3_c0 ^ x2_0) ^ x3_0) ^ g4_c0) ^ g1_c0) ^ g6_c0) ^ g7_c0);
    *y3_1 = (((((x0_1 ^ x1_1) ^ g0_c1) ^ g5_c1) ^ x3_1) ^ g6_c1) ^ g7_c1;
    *y3_0 = ~((((((x0_0 ^ x1_0) ^ g0_c0) ^ g5_c0) ^ x3_0) ^ g6_c0) ^ g7_c0);
    return 0;
}
