int present_hpc2(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1)
{
    g0_v01 = reg(x2_1 ^ rnd0);
    g0_v10 = reg(x2_0 ^ rnd0);
    g0_u01 = reg((~x1_0) * rnd0);
    g0_u10 = reg((~x1_1) * rnd0);
    g0_m01 = reg(x1_0 * g0_v01);
    g0_m10 = reg(x1_1 * g0_v10);
    g0_p00 = x1_0 * x2_0;
    g0_p11 = x1_1 * x2_1;
    g0_c0 = (g0_u01 ^ g0_m01) ^ g0_p00;
    g0_c1 = (g0_u10 ^ g0_m10) ^ g0_p11;
    g1_v01 = reg(x3_1 ^ rnd1);
    g1_v10 = reg(x3_0 ^ rnd1);
    g1_u01 = reg((~x1_0) * rnd1);
    g1_u10 = reg((~x1_1) * rnd1);
    g1_m01 = reg(x1_0 * g1_v01);
    g1_m10 = reg(x1_1 * g1_v10);
    g1_p00 = x1_0 * x3_0;
    g1_p11 = x1_1 * x3_1;
    g1_c0 = (g1_u01 ^ g1_m01) ^ g1_p00;
    g1_c1 = (g1_u10 ^ g1_m10) ^ g1_p11;
    g2_v01 = reg(x3_1 ^ rnd2);
    g2_v10 = reg(x3_0 ^ rnd2);
    g2_u01 = reg((~x2_0) * rnd2);
    g2_u10 = reg((~x2_1) * rnd2);
    g2_m01 = reg(x2_0 * g2_v01);
    g2_m10 = reg(x2_1 * g2_v10);
    g2_p00 = x2_0 * x3_0;
    g2_p11 = x2_1 * x3_1;
    g2_c0 = (g2_u01 ^ g2_m01) ^ g2_p00;
    g2_c1 = (g2_u10 ^ g2_m10) ^ g2_p11;
    g3_v01 = reg(x1_1 ^ rnd3);
    g3_v10 = reg(x1_0 ^ rnd3);
    g3_u01 = reg((~x0_0) * rnd3);
    g3_u10 = reg((~x0_1) * rnd3);
    g3_m01 = reg(x0_0 * g3_v01);
    g3_m10 = reg(x0_1 * g3_v10);
    g3_p00 = x0_0 * x1_0;
    g3_p11 = x0_1 * x1_1;
    g3_c0 = (g3_u01 ^ g3_m01) ^ g3_p00;
    g3_c1 = (g3_u10 ^ g3_m10) ^ g3_p11;
    g4_v01 = reg(x3_1 ^ rnd4);
    g4_v10 = reg(x3_0 ^ rnd4);
    g4_u01 = reg((~x0_0) * rnd4);
    g4_u10 = reg((~x0_1) * rnd4);
    g4_m01 = reg(x0_0 * g4_v01);
    g4_m10 = reg(x0_1 * g4_v10);
    g4_p00 = x0_0 * x3_0;
    g4_p11 = x0_1 * x3_1;
    g4_c0 = (g4_u01 ^ g4_m01) ^ g4_p00;
    g4_c1 = (g4_u10 ^ g4_m10) ^ g4_p11;
    g5_v01 = reg(g0_c1 ^ rnd5);
    g5_v10 = reg(g0_c0 ^ rnd5);
    g5_u01 = reg((~x0_0) * rnd5);
    g5_u10 = reg((~x0_1) * rnd5);
    g5_m01 = reg(x0_0 * g5_v01);
    g5_m10 = reg(x0_1 * g5_v10);
    g5_p00 = x0_0 * g0_c0;
    g5_p11 = x0_1 * g0_c1;
    g5_c0 = (g5_u01 ^ g5_m01) ^ g5_p00;
    g5_c1 = (g5_u10 ^ g5_m10) ^ g5_p11;
    g6_v01 = reg(g1_c1 ^ rnd6);
    g6_v10 = reg(g1_c0 ^ rnd6);
    g6_u01 = reg((~x0_0) * rnd6);
    g6_u10 = reg((~x0_1) * rnd6);
    g6_m01 = reg(x0_0 * g6_v01);
    g6_m10 = reg(x0_1 * g6_v10);
    g6_p00 = x0_0 * g1_c0;
    g6_p11 = x0_1 * g1_c1;
    g6_c0 = (g6_u01 ^ g6_m01) ^ g6_p00;
    g6_c1 = (g6_u10 ^ g6_m10) ^ g6_p11;
    g7_v01 = reg(g2_c1 ^ rnd7);
    g7_v10 = reg(g2_c0 ^ rnd7);
    g7_u01 = reg((~x0_0) * rnd7);
    g7_u10 = reg((~x0_1) * rnd7);
    g7_m01 = reg(x0_0 * g7_v01);
    g7_m10 = reg(x0_1 * g7_v10);
    g7_p00 = x0_0 * g2_c0;
    g7_p11 = x0_1 * g2_c1;
    g7_c0 = (g7_u01 ^ g7_m01) ^ g7_p00;
    g7_c1 = (g7_u10 ^ g7_m10) ^ g7_p11;
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
