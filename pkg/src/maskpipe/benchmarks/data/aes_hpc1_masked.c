int aes_hpc1(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool x4_0, bool x4_1, bool x5_0, bool x5_1, bool x6_0, bool x6_1, bool x7_0, bool x7_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool rnd8, bool rnd9, bool rnd10, bool rnd11, bool rnd12, bool rnd13, bool rnd14, bool rnd15, bool rnd16, bool rnd17, bool rnd18, bool rnd19, bool rnd20, bool rnd21, bool rnd22, bool rnd23, bool rnd24, bool rnd25, bool rnd26, bool rnd27, bool rnd28, bool rnd29, bool rnd30, bool rnd31, bool rnd32, bool rnd33, bool rnd34, bool rnd35, bool rnd36, bool rnd37, bool rnd38, bool rnd39, bool rnd40, bool rnd41, bool rnd42, bool rnd43, bool rnd44, bool rnd45, bool rnd46, bool rnd47, bool rnd48, bool rnd49, bool rnd50, bool rnd51, bool rnd52, bool rnd53, bool rnd54, bool rnd55, bool rnd56, bool rnd57, bool rnd58, bool rnd59, bool rnd60, bool rnd61, bool rnd62, bool rnd63, bool rnd64, bool rnd65, bool rnd66, bool rnd67, bool rnd68, bool rnd69, bool rnd70, bool rnd71, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1, bool *y4_0, bool *y4_1, bool *y5_0, bool *y5_1, bool *y6_0, bool *y6_1, bool *y7_0, bool *y7_1)
{
    t16 = x0_0 ^ x1_0;
    t17 = x0_1 ^ x1_1;
    t20 = (x2_0 ^ x4_0) ^ x5_0;
    t21 = (x2_1 ^ x4_1) ^ x5_1;
    t26 = ((x2_0 ^ x3_0) ^ x4_0) ^ x7_0;
    t27 = ((x2_1 ^ x3_1) ^ x4_1) ^ x7_1;
    t30 = (x3_0 ^ x5_0) ^ x6_0;
    t31 = (x3_1 ^ x5_1) ^ x6_1;
    t34 = (x4_0 ^ x5_0) ^ x6_0;
    t35 = (x4_1 ^ x5_1) ^ x6_1;
    t36 = x2_0 ^ x3_0;
    t37 = x2_1 ^ x3_1;
    t46 = ((((x1_0 ^ x2_0) ^ x3_0) ^ x4_0) ^ x6_0) ^ x7_0;
    t47 = ((((x1_1 ^ x2_1) ^ x3_1) ^ x4_1) ^ x6_1) ^ x7_1;
    t48 = x5_0 ^ x7_0;
    t49 = x5_1 ^ x7_1;
    g0_bb0 = reg(t30 ^ rnd0);
    g0_bb1 = reg(t31 ^ rnd0);
    g0_p01 = t48 * g0_bb1;
    g0_i01 = reg(g0_p01 ^ rnd1);
    g0_p10 = t49 * g0_bb0;
    g0_i10 = reg(g0_p10 ^ rnd1);
    g0_p00 = t48 * g0_bb0;
    g0_p11 = t49 * g0_bb1;
    g0_c0 = g0_i01 ^ g0_p00;
    g0_c1 = g0_i10 ^ g0_p11;
    g1_bb0 = reg(t26 ^ rnd2);
    g1_bb1 = reg(t27 ^ rnd2);
    g1_p01 = t46 * g1_bb1;
    g1_i01 = reg(g1_p01 ^ rnd3);
    g1_p10 = t47 * g1_bb0;
    g1_i10 = reg(g1_p10 ^ rnd3);
    g1_p00 = t46 * g1_bb0;
    g1_p11 = t47 * g1_bb1;
    g1_c0 = g1_i01 ^ g1_p00;
    g1_c1 = g1_i10 ^ g1_p11;
    t74 = t48 ^ t46;
    t75 = t49 ^ t47;
    g2_bb0 = reg((t30 ^ t26) ^ rnd4);
    g2_bb1 = reg((t31 ^ t27) ^ rnd4);
    g2_p01 = t74 * g2_bb1;
    g2_i01 = reg(g2_p01 ^ rnd5);
    g2_p10 = t75 * g2_bb0;
    g2_i10 = reg(g2_p10 ^ rnd5);
    g2_p00 = t74 * g2_bb0;
    g2_p11 = t75 * g2_bb1;
    g2_c0 = g2_i01 ^ g2_p00;
    g2_c1 = g2_i10 ^ g2_p11;
    t92 = g2_c0 ^ g1_c0;
    t93 = g2_c1 ^ g1_c1;
    g3_bb0 = reg(t20 ^ rnd6);
    g3_bb1 = reg(t21 ^ rnd6);
    g3_p01 = t36 * g3_bb1;
    g3_i01 = reg(g3_p01 ^ rnd7);
    g3_p10 = t37 * g3_bb0;
    g3_i10 = reg(g3_p10 ^ rnd7);
    g3_p00 = t36 * g3_bb0;
    g3_p11 = t37 * g3_bb1;
    g3_c0 = g3_i01 ^ g3_p00;
    g3_c1 = g3_i10 ^ g3_p11;
    g4_bb0 = reg(t16 ^ rnd8);
    g4_bb1 = reg(t17 ^ rnd8);
    g4_p01 = t34 * g4_bb1;
    g4_i01 = reg(g4_p01 ^ rnd9);
    g4_p10 = t35 * g4_bb0;
    g4_i10 = reg(g4_p10 ^ rnd9);
    g4_p00 = t34 * g4_bb0;
    g4_p11 = t35 * g4_bb1;
    g4_c0 = g4_i01 ^ g4_p00;
    g4_c1 = g4_i10 ^ g4_p11;
    t118 = t36 ^ t34;
    t119 = t37 ^ t35;
    g5_bb0 = reg((t20 ^ t16) ^ rnd10);
    g5_bb1 = reg((t21 ^ t17) ^ rnd10);
    g5_p01 = t118 * g5_bb1;
    g5_i01 = reg(g5_p01 ^ rnd11);
    g5_p10 = t119 * g5_bb0;
    g5_i10 = reg(g5_p10 ^ rnd11);
    g5_p00 = t118 * g5_bb0;
    g5_p11 = t119 * g5_bb1;
    g5_c0 = g5_i01 ^ g5_p00;
    g5_c1 = g5_i10 ^ g5_p11;
    t134 = g3_c0 ^ g4_c0;
    t135 = g3_c1 ^ g4_c1;
    t136 = g5_c0 ^ g4_c0;
    t137 = g5_c1 ^ g4_c1;
    t138 = t46 ^ t34;
    t139 = t47 ^ t35;
    t140 = t48 ^ t36;
    t141 = t49 ^ t37;
    t142 = t26 ^ t16;
    t143 = t27 ^ t17;
    t144 = t30 ^ t20;
    t145 = t31 ^ t21;
    g6_bb0 = reg(t144 ^ rnd12);
    g6_bb1 = reg(t145 ^ rnd12);
    g6_p01 = t140 * g6_bb1;
    g6_i01 = reg(g6_p01 ^ rnd13);
    g6_p10 = t141 * g6_bb0;
    g6_i10 = reg(g6_p10 ^ rnd13);
    g6_p00 = t140 * g6_bb0;
    g6_p11 = t141 * g6_bb1;
    g6_c0 = g6_i01 ^ g6_p00;
    g6_c1 = g6_i10 ^ g6_p11;
    g7_bb0 = reg(t142 ^ rnd14);
    g7_bb1 = reg(t143 ^ rnd14);
    g7_p01 = t138 * g7_bb1;
    g7_i01 = reg(g7_p01 ^ rnd15);
    g7_p10 = t139 * g7_bb0;
    g7_i10 = reg(g7_p10 ^ rnd15);
    g7_p00 = t138 * g7_bb0;
    g7_p11 = t139 * g7_bb1;
    g7_c0 = g7_i01 ^ g7_p00;
    g7_c1 = g7_i10 ^ g7_p11;
    t170 = t140 ^ t138;
    t171 = t141 ^ t139;
    g8_bb0 = reg((t144 ^ t142) ^ rnd16);
    g8_bb1 = reg((t145 ^ t143) ^ rnd16);
    g8_p01 = t170 * g8_bb1;
    g8_i01 = reg(g8_p01 ^ rnd17);
    g8_p10 = t171 * g8_bb0;
    g8_i10 = reg(g8_p10 ^ rnd17);
    g8_p00 = t170 * g8_bb0;
    g8_p11 = t171 * g8_bb1;
    g8_c0 = g8_i01 ^ g8_p00;
    g8_c1 = g8_i10 ^ g8_p11;
    t224 = (((t46 ^ t16) ^ t20) ^ t30) ^ (t92 ^ t134);
    t225 = (((t47 ^ t17) ^ t21) ^ t31) ^ (t93 ^ t135);
    t226 = (((t46 ^ t48) ^ t20) ^ t26) ^ (((g0_c0 ^ g1_c0) ^ t92) ^ t136);
    t227 = (((t47 ^ t49) ^ t21) ^ t27) ^ (((g0_c1 ^ g1_c1) ^ t93) ^ t137);
    t228 = ((((t36 ^ t46) ^ t48) ^ t26) ^ t30) ^ ((g6_c0 ^ g7_c0) ^ t134);
    t229 = ((((t37 ^ t47) ^ t49) ^ t27) ^ t31) ^ ((g6_c1 ^ g7_c1) ^ t135);
    t230 = ((t34 ^ t48) ^ t30) ^ ((g8_c0 ^ g7_c0) ^ t136);
    t231 = ((t35 ^ t49) ^ t31) ^ ((g8_c1 ^ g7_c1) ^ t137);
    g9_bb0 = reg(t226 ^ rnd18);
    g9_bb1 = reg(t227 ^ rnd18);
    g9_p01 = t230 * g9_bb1;
    g9_i01 = reg(g9_p01 ^ rnd19);
    g9_p10 = t231 * g9_bb0;
    g9_i10 = reg(g9_p10 ^ rnd19);
    g9_p00 = t230 * g9_bb0;
    g9_p11 = t231 * g9_bb1;
    g9_c0 = g9_i01 ^ g9_p00;
    g9_c1 = g9_i10 ^ g9_p11;
    g10_bb0 = reg(t224 ^ rnd20);
    g10_bb1 = reg(t225 ^ rnd20);
    g10_p01 = t228 * g10_bb1;
    g10_i01 = reg(g10_p01 ^ rnd21);
    g10_p10 = t229 * g10_bb0;
    g10_i10 = reg(g10_p10 ^ rnd21);
    g10_p00 = t228 * g10_bb0;
    g10_p11 = t229 * g10_bb1;
    g10_c0 = g10_i01 ^ g10_p00;
    g10_c1 = g10_i10 ^ g10_p11;
    t256 = t230 ^ t228;
    t257 = t231 ^ t229;
    g11_bb0 = reg((t226 ^ t224) ^ rnd22);
    g11_bb1 = reg((t227 ^ t225) ^ rnd22);
    g11_p01 = t256 * g11_bb1;
    g11_i01 = reg(g11_p01 ^ rnd23);
    g11_p10 = t257 * g11_bb0;
    g11_i10 = reg(g11_p10 ^ rnd23);
    g11_p00 = t256 * g11_bb0;
    g11_p11 = t257 * g11_bb1;
    g11_c0 = g11_i01 ^ g11_p00;
    g11_c1 = g11_i10 ^ g11_p11;
    t284 = (t228 ^ t226) ^ (g11_c0 ^ g10_c0);
    t285 = (t229 ^ t227) ^ (g11_c1 ^ g10_c1);
    t286 = (((t230 ^ t224) ^ t226) ^ (g9_c0 ^ g10_c0)) ^ t284;
    t287 = (((t231 ^ t225) ^ t227) ^ (g9_c1 ^ g10_c1)) ^ t285;
    g12_bb0 = reg(t284 ^ rnd24);
    g12_bb1 = reg(t285 ^ rnd24);
    g12_p01 = t230 * g12_bb1;
    g12_i01 = reg(g12_p01 ^ rnd25);
    g12_p10 = t231 * g12_bb0;
    g12_i10 = reg(g12_p10 ^ rnd25);
    g12_p00 = t230 * g12_bb0;
    g12_p11 = t231 * g12_bb1;
    g12_c0 = g12_i01 ^ g12_p00;
    g12_c1 = g12_i10 ^ g12_p11;
    g13_bb0 = reg(t286 ^ rnd26);
    g13_bb1 = reg(t287 ^ rnd26);
    g13_p01 = t228 * g13_bb1;
    g13_i01 = reg(g13_p01 ^ rnd27);
    g13_p10 = t229 * g13_bb0;
    g13_i10 = reg(g13_p10 ^ rnd27);
    g13_p00 = t228 * g13_bb0;
    g13_p11 = t229 * g13_bb1;
    g13_c0 = g13_i01 ^ g13_p00;
    g13_c1 = g13_i10 ^ g13_p11;
    t312 = t230 ^ t228;
    t313 = t231 ^ t229;
    g14_bb0 = reg((t284 ^ t286) ^ rnd28);
    g14_bb1 = reg((t285 ^ t287) ^ rnd28);
    g14_p01 = t312 * g14_bb1;
    g14_i01 = reg(g14_p01 ^ rnd29);
    g14_p10 = t313 * g14_bb0;
    g14_i10 = reg(g14_p10 ^ rnd29);
    g14_p00 = t312 * g14_bb0;
    g14_p11 = t313 * g14_bb1;
    g14_c0 = g14_i01 ^ g14_p00;
    g14_c1 = g14_i10 ^ g14_p11;
    t328 = g12_c0 ^ g13_c0;
    t329 = g12_c1 ^ g13_c1;
    t330 = g14_c0 ^ g13_c0;
    t331 = g14_c1 ^ g13_c1;
    t332 = t228 ^ t224;
    t333 = t229 ^ t225;
    t334 = t230 ^ t226;
    t335 = t231 ^ t227;
    g15_bb0 = reg(t284 ^ rnd30);
    g15_bb1 = reg(t285 ^ rnd30);
    g15_p01 = t334 * g15_bb1;
    g15_i01 = reg(g15_p01 ^ rnd31);
    g15_p10 = t335 * g15_bb0;
    g15_i10 = reg(g15_p10 ^ rnd31);
    g15_p00 = t334 * g15_bb0;
    g15_p11 = t335 * g15_bb1;
    g15_c0 = g15_i01 ^ g15_p00;
    g15_c1 = g15_i10 ^ g15_p11;
    g16_bb0 = reg(t286 ^ rnd32);
    g16_bb1 = reg(t287 ^ rnd32);
    g16_p01 = t332 * g16_bb1;
    g16_i01 = reg(g16_p01 ^ rnd33);
    g16_p10 = t333 * g16_bb0;
    g16_i10 = reg(g16_p10 ^ rnd33);
    g16_p00 = t332 * g16_bb0;
    g16_p11 = t333 * g16_bb1;
    g16_c0 = g16_i01 ^ g16_p00;
    g16_c1 = g16_i10 ^ g16_p11;
    t360 = t334 ^ t332;
    t361 = t335 ^ t333;
    g17_bb0 = reg((t284 ^ t286) ^ rnd34);
    g17_bb1 = reg((t285 ^ t287) ^ rnd34);
    g17_p01 = t360 * g17_bb1;
    g17_i01 = reg(g17_p01 ^ rnd35);
    g17_p10 = t361 * g17_bb0;
    g17_i10 = reg(g17_p10 ^ rnd35);
    g17_p00 = t360 * g17_bb0;
    g17_p11 = t361 * g17_bb1;
    g17_c0 = g17_i01 ^ g17_p00;
    g17_c1 = g17_i10 ^ g17_p11;
    t376 = g15_c0 ^ g16_c0;
    t377 = g15_c1 ^ g16_c1;
    t378 = g17_c0 ^ g16_c0;
    t379 = g17_c1 ^ g16_c1;
    g18_bb0 = reg(t330 ^ rnd36);
    g18_bb1 = reg(t331 ^ rnd36);
    g18_p01 = t48 * g18_bb1;
    g18_i01 = reg(g18_p01 ^ rnd37);
    g18_p10 = t49 * g18_bb0;
    g18_i10 = reg(g18_p10 ^ rnd37);
    g18_p00 = t48 * g18_bb0;
    g18_p11 = t49 * g18_bb1;
    g18_c0 = g18_i01 ^ g18_p00;
    g18_c1 = g18_i10 ^ g18_p11;
    g19_bb0 = reg(t328 ^ rnd38);
    g19_bb1 = reg(t329 ^ rnd38);
    g19_p01 = t46 * g19_bb1;
    g19_i01 = reg(g19_p01 ^ rnd39);
    g19_p10 = t47 * g19_bb0;
    g19_i10 = reg(g19_p10 ^ rnd39);
    g19_p00 = t46 * g19_bb0;
    g19_p11 = t47 * g19_bb1;
    g19_c0 = g19_i01 ^ g19_p00;
    g19_c1 = g19_i10 ^ g19_p11;
    t404 = t48 ^ t46;
    t405 = t49 ^ t47;
    g20_bb0 = reg((t330 ^ t328) ^ rnd40);
    g20_bb1 = reg((t331 ^ t329) ^ rnd40);
    g20_p01 = t404 * g20_bb1;
    g20_i01 = reg(g20_p01 ^ rnd41);
    g20_p10 = t405 * g20_bb0;
    g20_i10 = reg(g20_p10 ^ rnd41);
    g20_p00 = t404 * g20_bb0;
    g20_p11 = t405 * g20_bb1;
    g20_c0 = g20_i01 ^ g20_p00;
    g20_c1 = g20_i10 ^ g20_p11;
    t422 = g20_c0 ^ g19_c0;
    t423 = g20_c1 ^ g19_c1;
    g21_bb0 = reg(t378 ^ rnd42);
    g21_bb1 = reg(t379 ^ rnd42);
    g21_p01 = t36 * g21_bb1;
    g21_i01 = reg(g21_p01 ^ rnd43);
    g21_p10 = t37 * g21_bb0;
    g21_i10 = reg(g21_p10 ^ rnd43);
    g21_p00 = t36 * g21_bb0;
    g21_p11 = t37 * g21_bb1;
    g21_c0 = g21_i01 ^ g21_p00;
    g21_c1 = g21_i10 ^ g21_p11;
    g22_bb0 = reg(t376 ^ rnd44);
    g22_bb1 = reg(t377 ^ rnd44);
    g22_p01 = t34 * g22_bb1;
    g22_i01 = reg(g22_p01 ^ rnd45);
    g22_p10 = t35 * g22_bb0;
    g22_i10 = reg(g22_p10 ^ rnd45);
    g22_p00 = t34 * g22_bb0;
    g22_p11 = t35 * g22_bb1;
    g22_c0 = g22_i01 ^ g22_p00;
    g22_c1 = g22_i10 ^ g22_p11;
    t448 = t36 ^ t34;
    t449 = t37 ^ t35;
    g23_bb0 = reg((t378 ^ t376) ^ rnd46);
    g23_bb1 = reg((t379 ^ t377) ^ rnd46);
    g23_p01 = t448 * g23_bb1;
    g23_i01 = reg(g23_p01 ^ rnd47);
    g23_p10 = t449 * g23_bb0;
    g23_i10 = reg(g23_p10 ^ rnd47);
    g23_p00 = t448 * g23_bb0;
    g23_p11 = t449 * g23_bb1;
    g23_c0 = g23_i01 ^ g23_p00;
    g23_c1 = g23_i10 ^ g23_p11;
    t464 = g21_c0 ^ g22_c0;
    t465 = g21_c1 ^ g22_c1;
    t466 = g23_c0 ^ g22_c0;
    t467 = g23_c1 ^ g22_c1;
    t468 = t46 ^ t34;
    t469 = t47 ^ t35;
    t470 = t48 ^ t36;
    t471 = t49 ^ t37;
    t472 = t328 ^ t376;
    t473 = t329 ^ t377;
    t474 = t330 ^ t378;
    t475 = t331 ^ t379;
    g24_bb0 = reg(t474 ^ rnd48);
    g24_bb1 = reg(t475 ^ rnd48);
    g24_p01 = t470 * g24_bb1;
    g24_i01 = reg(g24_p01 ^ rnd49);
    g24_p10 = t471 * g24_bb0;
    g24_i10 = reg(g24_p10 ^ rnd49);
    g24_p00 = t470 * g24_bb0;
    g24_p11 = t471 * g24_bb1;
    g24_c0 = g24_i01 ^ g24_p00;
    g24_c1 = g24_i10 ^ g24_p11;
    g25_bb0 = reg(t472 ^ rnd50);
    g25_bb1 = reg(t473 ^ rnd50);
    g25_p01 = t468 * g25_bb1;
    g25_i01 = reg(g25_p01 ^ rnd51);
    g25_p10 = t469 * g25_bb0;
    g25_i10 = reg(g25_p10 ^ rnd51);
    g25_p00 = t468 * g25_bb0;
    g25_p11 = t469 * g25_bb1;
    g25_c0 = g25_i01 ^ g25_p00;
    g25_c1 = g25_i10 ^ g25_p11;
    t500 = t470 ^ t468;
    t501 = t471 ^ t469;
    g26_bb0 = reg((t474 ^ t472) ^ rnd52);
    g26_bb1 = reg((t475 ^ t473) ^ rnd52);
    g26_p01 = t500 * g26_bb1;
    g26_i01 = reg(g26_p01 ^ rnd53);
    g26_p10 = t501 * g26_bb0;
    g26_i10 = reg(g26_p10 ^ rnd53);
    g26_p00 = t500 * g26_bb0;
    g26_p11 = t501 * g26_bb1;
    g26_c0 = g26_i01 ^ g26_p00;
    g26_c1 = g26_i10 ^ g26_p11;
    t522 = t422 ^ t464;
    t523 = t423 ^ t465;
    t524 = ((g18_c0 ^ g19_c0) ^ t422) ^ t466;
    t525 = ((g18_c1 ^ g19_c1) ^ t423) ^ t467;
    t526 = (g24_c0 ^ g25_c0) ^ t464;
    t527 = (g24_c1 ^ g25_c1) ^ t465;
    t528 = (g26_c0 ^ g25_c0) ^ t466;
    t529 = (g26_c1 ^ g25_c1) ^ t467;
    t530 = t34 ^ t16;
    t531 = t35 ^ t17;
    t532 = t36 ^ t20;
    t533 = t37 ^ t21;
    t534 = t46 ^ t26;
    t535 = t47 ^ t27;
    t536 = t48 ^ t30;
    t537 = t49 ^ t31;
    g27_bb0 = reg(t330 ^ rnd54);
    g27_bb1 = reg(t331 ^ rnd54);
    g27_p01 = t536 * g27_bb1;
    g27_i01 = reg(g27_p01 ^ rnd55);
    g27_p10 = t537 * g27_bb0;
    g27_i10 = reg(g27_p10 ^ rnd55);
    g27_p00 = t536 * g27_bb0;
    g27_p11 = t537 * g27_bb1;
    g27_c0 = g27_i01 ^ g27_p00;
    g27_c1 = g27_i10 ^ g27_p11;
    g28_bb0 = reg(t328 ^ rnd56);
    g28_bb1 = reg(t329 ^ rnd56);
    g28_p01 = t534 * g28_bb1;
    g28_i01 = reg(g28_p01 ^ rnd57);
    g28_p10 = t535 * g28_bb0;
    g28_i10 = reg(g28_p10 ^ rnd57);
    g28_p00 = t534 * g28_bb0;
    g28_p11 = t535 * g28_bb1;
    g28_c0 = g28_i01 ^ g28_p00;
    g28_c1 = g28_i10 ^ g28_p11;
    t562 = t536 ^ t534;
    t563 = t537 ^ t535;
    g29_bb0 = reg((t330 ^ t328) ^ rnd58);
    g29_bb1 = reg((t331 ^ t329) ^ rnd58);
    g29_p01 = t562 * g29_bb1;
    g29_i01 = reg(g29_p01 ^ rnd59);
    g29_p10 = t563 * g29_bb0;
    g29_i10 = reg(g29_p10 ^ rnd59);
    g29_p00 = t562 * g29_bb0;
    g29_p11 = t563 * g29_bb1;
    g29_c0 = g29_i01 ^ g29_p00;
    g29_c1 = g29_i10 ^ g29_p11;
    t580 = g29_c0 ^ g28_c0;
    t581 = g29_c1 ^ g28_c1;
    g30_bb0 = reg(t378 ^ rnd60);
    g30_bb1 = reg(t379 ^ rnd60);
    g30_p01 = t532 * g30_bb1;
    g30_i01 = reg(g30_p01 ^ rnd61);
    g30_p10 = t533 * g30_bb0;
    g30_i10 = reg(g30_p10 ^ rnd61);
    g30_p00 = t532 * g30_bb0;
    g30_p11 = t533 * g30_bb1;
    g30_c0 = g30_i01 ^ g30_p00;
    g30_c1 = g30_i10 ^ g30_p11;
    g31_bb0 = reg(t376 ^ rnd62);
    g31_bb1 = reg(t377 ^ rnd62);
    g31_p01 = t530 * g31_bb1;
    g31_i01 = reg(g31_p01 ^ rnd63);
    g31_p10 = t531 * g31_bb0;
    g31_i10 = reg(g31_p10 ^ rnd63);
    g31_p00 = t530 * g31_bb0;
    g31_p11 = t531 * g31_bb1;
    g31_c0 = g31_i01 ^ g31_p00;
    g31_c1 = g31_i10 ^ g31_p11;
    t606 = t532 ^ t530;
    t607 = t533 ^ t531;
    g32_bb0 = reg((t378 ^ t376) ^ rnd64);
    g32_bb1 = reg((t379 ^ t377) ^ rnd64);
    g32_p01 = t606 * g32_bb1;
    g32_i01 = reg(g32_p01 ^ rnd65);
    g32_p10 = t607 * g32_bb0;
    g32_i10 = reg(g32_p10 ^ rnd65);
    g32_p00 = t606 * g32_bb0;
    g32_p11 = t607 * g32_bb1;
    g32_c0 = g32_i01 ^ g32_p00;
    g32_c1 = g32_i10 ^ g32_p11;
    t622 = g30_c0 ^ g31_c0;
    t623 = g30_c1 ^ g31_c1;
    t624 = g32_c0 ^ g31_c0;
    t625 = g32_c1 ^ g31_c1;
    t626 = t534 ^ t530;
    t627 = t535 ^ t531;
    t628 = t536 ^ t532;
    t629 = t537 ^ t533;
    t630 = t328 ^ t376;
    t631 = t329 ^ t377;
    t632 = t330 ^ t378;
    t633 = t331 ^ t379;
    g33_bb0 = reg(t632 ^ rnd66);
    g33_bb1 = reg(t633 ^ rnd66);
    g33_p01 = t628 * g33_bb1;
    g33_i01 = reg(g33_p01 ^ rnd67);
    g33_p10 = t629 * g33_bb0;
    g33_i10 = reg(g33_p10 ^ rnd67);
    g33_p00 = t628 * g33_bb0;
    g33_p11 = t629 * g33_bb1;
    g33_c0 = g33_i01 ^ g33_p00;
    g33_c1 = g33_i10 ^ g33_p11;
    g34_bb0 = reg(t630 ^ rnd68);
    g34_bb1 = reg(t631 ^ rnd68);
    g34_p01 = t626 * g34_bb1;
    g34_i01 = reg(g34_p01 ^ rnd69);
    g34_p10 = t627 * g34_bb0;
    g34_i10 = reg(g34_p10 ^ rnd69);
    g34_p00 = t626 * g34_bb0;
    g34_p11 = t627 * g34_bb1;
    g34_c0 = g34_i01 ^ g34_p00;
    g34_c1 = g34_i10 ^ g34_p11;
    t658 = t628 ^ t626;
    t659 = t629 ^ t627;
    g35_bb0 = reg((t632 ^ t630) ^ rnd70);
    g35_bb1 = reg((t633 ^ t631) ^ rnd70);
    g35_p01 = t658 * g35_bb1;
    g35_i01 = reg(g35_p01 ^ rnd71);
    g35_p10 = t659 * g35_bb0;
    g35_i10 = reg(g35_p10 ^ rnd71);
    g35_p00 = t658 * g35_bb0;
    g35_p11 = t659 * g35_bb1;
    g35_c0 = g35_i01 ^ g35_p00;
    g35_c1 = g35_i10 ^ g35_p11;
    t680 = t580 ^ t622;
    t681 = t581 ^ t623;
    t682 = ((g27_c0 ^ g28_c0) ^ t580) ^ t624;
    t683 = ((g27_c1 ^ g28_c1) ^ t581) ^ t625;
    t684 = (g33_c0 ^ g34_c0) ^ t622;
    t685 = (g33_c1 ^ g34_c1) ^ t623;
    t686 = (g35_c0 ^ g34_c0) ^ t624;
    t687 = (g35_c1 ^ g34_c1) ^ t625;
    *y0_1 = (((t681 ^ t683) ^ t687) ^ t523) ^ t527;
    *y1_1 = ((t681 ^ t685) ^ t523) ^ t525;
    *y2_0 = ((t680 ^ t686) ^ t524) ^ t528;
    *y2_1 = ((t681 ^ t687) ^ t525) ^ t529;
    *y3_0 = (((t680 ^ t682) ^ t686) ^ t522) ^ t528;
    *y3_1 = (((t681 ^ t683) ^ t687) ^ t523) ^ t529;
    *y4_0 = (((((t680 ^ t682) ^ t684) ^ t686) ^ t522) ^ t524) ^ t528;
    *y4_1 = (((((t681 ^ t683) ^ t685) ^ t687) ^ t523) ^ t525) ^ t529;
    *y5_1 = ((t685 ^ t523) ^ t525) ^ t527;
    *y6_1 = t523 ^ t525;
    *y7_0 = (t684 ^ t686) ^ t524;
    *y7_1 = (t685 ^ t687) ^ t525;
    *y0_0 = ~((((t680 ^ t682) ^ t686) ^ t522) ^ t526);
    *y1_0 = ~(((t680 ^ t684) ^ t522) ^ t524);
    *y5_0 = ~(((t684 ^ t522) ^ t524) ^ t526);
    *y6_0 = ~(t522 ^ t524);
    return 0;
}
