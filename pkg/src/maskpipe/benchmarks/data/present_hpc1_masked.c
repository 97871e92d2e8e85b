int present_hpc1(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool rnd8, bool rnd9, bool rnd10, bool rnd11, bool rnd12, bool rnd13, bool rnd14, bool rnd15, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1)
{
    g0_bb0 = reg(x2_0 ^ rnd0);
    g0_bb1 = reg(x2_1 ^ rnd0);
    g0_p01 = x1_0 * g0_bb1;
    g0_i01 = reg(g0_p01 ^ rnd1);
    g0_p10 = x1_1 * g0_bb0;
    g0_i10 = reg(g0_p10 ^ rnd1);
    g0_p00 = x1_0 * g0_bb0;
    g0_p11 = x1_1 * g0_bb1;
    g0_c0 = g0_i01 ^ g0_p00;
    g0_c1 = g0_i10 ^ g0_p11;
    g1_bb0 = reg(x3_0 ^ rnd2);
    g1_bb1 = reg(x3_1 ^ rnd2);
    g1_p01 = x1_0 * g1_bb1;
    g1_i01 = reg(g1_p01 ^ rnd3);
    g1_p10 = x1_1 * g1_bb0;
    g1_i10 = reg(g1_p10 ^ rnd3);
    g1_p00 = x1_0 * g1_bb0;
    g1_p11 = x1_1 * g1_bb1;
    g1_c0 = g1_i01 ^ g1_p00;
    g1_c1 = g1_i10 ^ g1_p11;
    g2_bb0 = reg(x3_0 ^ rnd4);
    g2_bb1 = reg(x3_1 ^ rnd4);
    g2_p01 = x2_0 * g2_bb1;
    g2_i01 = reg(g2_p01 ^ rnd5);
    g2_p10 = x2_1 * g2_bb0;
    g2_i10 = reg(g2_p10 ^ rnd5);
    g2_p00 = x2_0 * g2_bb0;
    g2_p11 = x2_1 * g2_bb1;
    g2_c0 = g2_i01 ^ g2_p00;
    g2_c1 = g2_i10 ^ g2_p11;
    g3_bb0 = reg(x1_0 ^ rnd6);
    g3_bb1 = reg(x1_1 ^ rnd6);
    g3_p01 = x0_0 * g3_bb1;
    g3_i01 = reg(g3_p01 ^ rnd7);
    g3_p10 = x0_1 * g3_bb0;
    g3_i10 = reg(g3_p10 ^ rnd7);
    g3_p00 = x0_0 * g3_bb0;
    g3_p11 = x0_1 * g3_bb1;
    g3_c0 = g3_i01 ^ g3_p00;
    g3_c1 = g3_i10 ^ g3_p11;
    g4_bb0 = reg(x3_0 ^ rnd8);
    g4_bb1 = reg(x3_1 ^ rnd8);
    g4_p01 = x0_0 * g4_bb1;
    g4_i01 = reg(g4_p01 ^ rnd9);
    g4_p10 = x0_1 * g4_bb0;
    g4_i10 = reg(g4_p10 ^ rnd9);
    g4_p00 = x0_0 * g4_bb0;
    g4_p11 = x0_1 * g4_bb1;
    g4_c0 = g4_i01 ^ g4_p00;
    g4_c1 = g4_i10 ^ g4_p11;
    g5_bb0 = reg(g0_c0 ^ rnd10);
    g5_bb1 = reg(g0_c1 ^ rnd10);
    g5_p01 = x0_0 * g5_bb1;
    g5_i01 = reg(g5_p01 ^ rnd11);
    g5_p10 = x0_1 * g5_bb0;
    g5_i10 = reg(g5_p10 ^ rnd11);
    g5_p00 = x0_0 * g5_bb0;
    g5_p11 = x0_1 * g5_bb1;
    g5_c0 = g5_i01 ^ g5_p00;
    g5_c1 = g5_i10 ^ g5_p11;
    g6_bb0 = reg(g1_c0 ^ rnd12);
    g6_bb1 = reg(g1_c1 ^ rnd12);
    g6_p01 = x0_0 * g6_bb1;
    g6_i01 = reg(g6_p01 ^ rnd13);
    g6_p10 = x0_1 * g6_bb0;
    g6_i10 = reg(g6_p10 ^ rnd13);
    g6_p00 = x0_0 * g6_bb0;
    g6_p11 = x0_1 * g6_bb1;
    g6_c0 = g6_i01 ^ g6_p00;
    g6_c1 = g6_i10 ^ g6_p11;
    g7_bb0 = reg(g2_c0 ^ rnd14);
    g7_bb1 = reg(g2_c1 ^ rnd14);
    g7_p01 = x0_0 * g7_bb1;
    g7_i01 = reg(g7_p01 ^ rnd15);
    g7_p10 = x0_1 * g7_bb0;
    g7_i10 = reg(g7_p10 ^ rnd15);
    g7_p00 = x0_0 * g7_bb0;
    g7_p11 = x0_1 * g7_bb1;
    g7_c0 = g7_i01 ^ g7_p00;
    g7_c1 = g7_i10 ^ g7_p11;
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
