int aes_hpc2(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool x4_0, bool x4_1, bool x5_0, bool x5_1, bool x6_0, bool x6_1, bool x7_0, bool x7_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool rnd8, bool rnd9, bool rnd10, bool rnd11, bool rnd12, bool rnd13, bool rnd14, bool rnd15, bool rnd16, bool rnd17, bool rnd18, bool rnd19, bool rnd20, bool rnd21, bool rnd22, bool rnd23, bool rnd24, bool rnd25, bool rnd26, bool rnd27, bool rnd28, bool rnd29, bool rnd30, bool rnd31, bool rnd32, bool rnd33, bool rnd34, bool rnd35, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1, bool *y4_0, bool *y4_1, bool *y5_0, bool *y5_1, bool *y6_0, bool *y6_1, bool *y7_0, bool *y7_1)
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
    g0_v01 = reg(t31 ^ rnd0);
    g0_v10 = reg(t30 ^ rnd0);
    g0_u01 = reg((~t48) * rnd0);
    g0_u10 = reg((~t49) * rnd0);
    g0_m01 = reg(t48 * g0_v01);
    g0_m10 = reg(t49 * g0_v10);
    g0_p00 = t48 * t30;
    g0_p11 = t49 * t31;
    g0_c0 = (g0_u01 ^ g0_m01) ^ g0_p00;
    g0_c1 = (g0_u10 ^ g0_m10) ^ g0_p11;
    g1_v01 = reg(t27 ^ rnd1);
    g1_v10 = reg(t26 ^ rnd1);
    g1_u01 = reg((~t46) * rnd1);
    g1_u10 = reg((~t47) * rnd1);
    g1_m01 = reg(t46 * g1_v01);
    g1_m10 = reg(t47 * g1_v10);
    g1_p00 = t46 * t26;
    g1_p11 = t47 * t27;
    g1_c0 = (g1_u01 ^ g1_m01) ^ g1_p00;
    g1_c1 = (g1_u10 ^ g1_m10) ^ g1_p11;
    t80 = t48 ^ t46;
    t81 = t49 ^ t47;
    t82 = t30 ^ t26;
    t83 = t31 ^ t27;
    g2_v01 = reg(t83 ^ rnd2);
    g2_v10 = reg(t82 ^ rnd2);
    g2_u01 = reg((~t80) * rnd2);
    g2_u10 = reg((~t81) * rnd2);
    g2_m01 = reg(t80 * g2_v01);
    g2_m10 = reg(t81 * g2_v10);
    g2_p00 = t80 * t82;
    g2_p11 = t81 * t83;
    g2_c0 = (g2_u01 ^ g2_m01) ^ g2_p00;
    g2_c1 = (g2_u10 ^ g2_m10) ^ g2_p11;
    t101 = g2_c0 ^ g1_c0;
    t102 = g2_c1 ^ g1_c1;
    g3_v01 = reg(t21 ^ rnd3);
    g3_v10 = reg(t20 ^ rnd3);
    g3_u01 = reg((~t36) * rnd3);
    g3_u10 = reg((~t37) * rnd3);
    g3_m01 = reg(t36 * g3_v01);
    g3_m10 = reg(t37 * g3_v10);
    g3_p00 = t36 * t20;
    g3_p11 = t37 * t21;
    g3_c0 = (g3_u01 ^ g3_m01) ^ g3_p00;
    g3_c1 = (g3_u10 ^ g3_m10) ^ g3_p11;
    g4_v01 = reg(t17 ^ rnd4);
    g4_v10 = reg(t16 ^ rnd4);
    g4_u01 = reg((~t34) * rnd4);
    g4_u10 = reg((~t35) * rnd4);
    g4_m01 = reg(t34 * g4_v01);
    g4_m10 = reg(t35 * g4_v10);
    g4_p00 = t34 * t16;
    g4_p11 = t35 * t17;
    g4_c0 = (g4_u01 ^ g4_m01) ^ g4_p00;
    g4_c1 = (g4_u10 ^ g4_m10) ^ g4_p11;
    t133 = t36 ^ t34;
    t134 = t37 ^ t35;
    t135 = t20 ^ t16;
    t136 = t21 ^ t17;
    g5_v01 = reg(t136 ^ rnd5);
    g5_v10 = reg(t135 ^ rnd5);
    g5_u01 = reg((~t133) * rnd5);
    g5_u10 = reg((~t134) * rnd5);
    g5_m01 = reg(t133 * g5_v01);
    g5_m10 = reg(t134 * g5_v10);
    g5_p00 = t133 * t135;
    g5_p11 = t134 * t136;
    g5_c0 = (g5_u01 ^ g5_m01) ^ g5_p00;
    g5_c1 = (g5_u10 ^ g5_m10) ^ g5_p11;
    t152 = g3_c0 ^ g4_c0;
    t153 = g3_c1 ^ g4_c1;
    t154 = g5_c0 ^ g4_c0;
    t155 = g5_c1 ^ g4_c1;
    t156 = t46 ^ t34;
    t157 = t47 ^ t35;
    t158 = t48 ^ t36;
    t159 = t49 ^ t37;
    t160 = t26 ^ t16;
    t161 = t27 ^ t17;
    t162 = t30 ^ t20;
    t163 = t31 ^ t21;
    g6_v01 = reg(t163 ^ rnd6);
    g6_v10 = reg(t162 ^ rnd6);
    g6_u01 = reg((~t158) * rnd6);
    g6_u10 = reg((~t159) * rnd6);
    g6_m01 = reg(t158 * g6_v01);
    g6_m10 = reg(t159 * g6_v10);
    g6_p00 = t158 * t162;
    g6_p11 = t159 * t163;
    g6_c0 = (g6_u01 ^ g6_m01) ^ g6_p00;
    g6_c1 = (g6_u10 ^ g6_m10) ^ g6_p11;
    g7_v01 = reg(t161 ^ rnd7);
    g7_v10 = reg(t160 ^ rnd7);
    g7_u01 = reg((~t156) * rnd7);
    g7_u10 = reg((~t157) * rnd7);
    g7_m01 = reg(t156 * g7_v01);
    g7_m10 = reg(t157 * g7_v10);
    g7_p00 = t156 * t160;
    g7_p11 = t157 * t161;
    g7_c0 = (g7_u01 ^ g7_m01) ^ g7_p00;
    g7_c1 = (g7_u10 ^ g7_m10) ^ g7_p11;
    t194 = t158 ^ t156;
    t195 = t159 ^ t157;
    t196 = t162 ^ t160;
    t197 = t163 ^ t161;
    g8_v01 = reg(t197 ^ rnd8);
    g8_v10 = reg(t196 ^ rnd8);
    g8_u01 = reg((~t194) * rnd8);
    g8_u10 = reg((~t195) * rnd8);
    g8_m01 = reg(t194 * g8_v01);
    g8_m10 = reg(t195 * g8_v10);
    g8_p00 = t194 * t196;
    g8_p11 = t195 * t197;
    g8_c0 = (g8_u01 ^ g8_m01) ^ g8_p00;
    g8_c1 = (g8_u10 ^ g8_m10) ^ g8_p11;
    t251 = (((t46 ^ t16) ^ t20) ^ t30) ^ (t101 ^ t152);
    t252 = (((t47 ^ t17) ^ t21) ^ t31) ^ (t102 ^ t153);
    t253 = (((t46 ^ t48) ^ t20) ^ t26) ^ (((g0_c0 ^ g1_c0) ^ t101) ^ t154);
    t254 = (((t47 ^ t49) ^ t21) ^ t27) ^ (((g0_c1 ^ g1_c1) ^ t102) ^ t155);
    t255 = ((((t36 ^ t46) ^ t48) ^ t26) ^ t30) ^ ((g6_c0 ^ g7_c0) ^ t152);
    t256 = ((((t37 ^ t47) ^ t49) ^ t27) ^ t31) ^ ((g6_c1 ^ g7_c1) ^ t153);
    t257 = ((t34 ^ t48) ^ t30) ^ ((g8_c0 ^ g7_c0) ^ t154);
    t258 = ((t35 ^ t49) ^ t31) ^ ((g8_c1 ^ g7_c1) ^ t155);
    g9_v01 = reg(t254 ^ rnd9);
    g9_v10 = reg(t253 ^ rnd9);
    g9_u01 = reg((~t257) * rnd9);
    g9_u10 = reg((~t258) * rnd9);
    g9_m01 = reg(t257 * g9_v01);
    g9_m10 = reg(t258 * g9_v10);
    g9_p00 = t257 * t253;
    g9_p11 = t258 * t254;
    g9_c0 = (g9_u01 ^ g9_m01) ^ g9_p00;
    g9_c1 = (g9_u10 ^ g9_m10) ^ g9_p11;
    g10_v01 = reg(t252 ^ rnd10);
    g10_v10 = reg(t251 ^ rnd10);
    g10_u01 = reg((~t255) * rnd10);
    g10_u10 = reg((~t256) * rnd10);
    g10_m01 = reg(t255 * g10_v01);
    g10_m10 = reg(t256 * g10_v10);
    g10_p00 = t255 * t251;
    g10_p11 = t256 * t252;
    g10_c0 = (g10_u01 ^ g10_m01) ^ g10_p00;
    g10_c1 = (g10_u10 ^ g10_m10) ^ g10_p11;
    t289 = t257 ^ t255;
    t290 = t258 ^ t256;
    t291 = t253 ^ t251;
    t292 = t254 ^ t252;
    g11_v01 = reg(t292 ^ rnd11);
    g11_v10 = reg(t291 ^ rnd11);
    g11_u01 = reg((~t289) * rnd11);
    g11_u10 = reg((~t290) * rnd11);
    g11_m01 = reg(t289 * g11_v01);
    g11_m10 = reg(t290 * g11_v10);
    g11_p00 = t289 * t291;
    g11_p11 = t290 * t292;
    g11_c0 = (g11_u01 ^ g11_m01) ^ g11_p00;
    g11_c1 = (g11_u10 ^ g11_m10) ^ g11_p11;
    t320 = (t255 ^ t253) ^ (g11_c0 ^ g10_c0);
    t321 = (t256 ^ t254) ^ (g11_c1 ^ g10_c1);
    t322 = (((t257 ^ t251) ^ t253) ^ (g9_c0 ^ g10_c0)) ^ t320;
    t323 = (((t258 ^ t252) ^ t254) ^ (g9_c1 ^ g10_c1)) ^ t321;
    g12_v01 = reg(t321 ^ rnd12);
    g12_v10 = reg(t320 ^ rnd12);
    g12_u01 = reg((~t257) * rnd12);
    g12_u10 = reg((~t258) * rnd12);
    g12_m01 = reg(t257 * g12_v01);
    g12_m10 = reg(t258 * g12_v10);
    g12_p00 = t257 * t320;
    g12_p11 = t258 * t321;
    g12_c0 = (g12_u01 ^ g12_m01) ^ g12_p00;
    g12_c1 = (g12_u10 ^ g12_m10) ^ g12_p11;
    g13_v01 = reg(t323 ^ rnd13);
    g13_v10 = reg(t322 ^ rnd13);
    g13_u01 = reg((~t255) * rnd13);
    g13_u10 = reg((~t256) * rnd13);
    g13_m01 = reg(t255 * g13_v01);
    g13_m10 = reg(t256 * g13_v10);
    g13_p00 = t255 * t322;
    g13_p11 = t256 * t323;
    g13_c0 = (g13_u01 ^ g13_m01) ^ g13_p00;
    g13_c1 = (g13_u10 ^ g13_m10) ^ g13_p11;
    t354 = t257 ^ t255;
    t355 = t258 ^ t256;
    t356 = t320 ^ t322;
    t357 = t321 ^ t323;
    g14_v01 = reg(t357 ^ rnd14);
    g14_v10 = reg(t356 ^ rnd14);
    g14_u01 = reg((~t354) * rnd14);
    g14_u10 = reg((~t355) * rnd14);
    g14_m01 = reg(t354 * g14_v01);
    g14_m10 = reg(t355 * g14_v10);
    g14_p00 = t354 * t356;
    g14_p11 = t355 * t357;
    g14_c0 = (g14_u01 ^ g14_m01) ^ g14_p00;
    g14_c1 = (g14_u10 ^ g14_m10) ^ g14_p11;
    t373 = g12_c0 ^ g13_c0;
    t374 = g12_c1 ^ g13_c1;
    t375 = g14_c0 ^ g13_c0;
    t376 = g14_c1 ^ g13_c1;
    t377 = t255 ^ t251;
    t378 = t256 ^ t252;
    t379 = t257 ^ t253;
    t380 = t258 ^ t254;
    g15_v01 = reg(t321 ^ rnd15);
    g15_v10 = reg(t320 ^ rnd15);
    g15_u01 = reg((~t379) * rnd15);
    g15_u10 = reg((~t380) * rnd15);
    g15_m01 = reg(t379 * g15_v01);
    g15_m10 = reg(t380 * g15_v10);
    g15_p00 = t379 * t320;
    g15_p11 = t380 * t321;
    g15_c0 = (g15_u01 ^ g15_m01) ^ g15_p00;
    g15_c1 = (g15_u10 ^ g15_m10) ^ g15_p11;
    g16_v01 = reg(t323 ^ rnd16);
    g16_v10 = reg(t322 ^ rnd16);
    g16_u01 = reg((~t377) * rnd16);
    g16_u10 = reg((~t378) * rnd16);
    g16_m01 = reg(t377 * g16_v01);
    g16_m10 = reg(t378 * g16_v10);
    g16_p00 = t377 * t322;
    g16_p11 = t378 * t323;
    g16_c0 = (g16_u01 ^ g16_m01) ^ g16_p00;
    g16_c1 = (g16_u10 ^ g16_m10) ^ g16_p11;
    t411 = t379 ^ t377;
    t412 = t380 ^ t378;
    t413 = t320 ^ t322;
    t414 = t321 ^ t323;
    g17_v01 = reg(t414 ^ rnd17);
    g17_v10 = reg(t413 ^ rnd17);
    g17_u01 = reg((~t411) * rnd17);
    g17_u10 = reg((~t412) * rnd17);
    g17_m01 = reg(t411 * g17_v01);
    g17_m10 = reg(t412 * g17_v10);
    g17_p00 = t411 * t413;
    g17_p11 = t412 * t414;
    g17_c0 = (g17_u01 ^ g17_m01) ^ g17_p00;
    g17_c1 = (g17_u10 ^ g17_m10) ^ g17_p11;
    t430 = g15_c0 ^ g16_c0;
    t431 = g15_c1 ^ g16_c1;
    t432 = g17_c0 ^ g16_c0;
    t433 = g17_c1 ^ g16_c1;
    g18_v01 = reg(t376 ^ rnd18);
    g18_v10 = reg(t375 ^ rnd18);
    g18_u01 = reg((~t48) * rnd18);
    g18_u10 = reg((~t49) * rnd18);
    g18_m01 = reg(t48 * g18_v01);
    g18_m10 = reg(t49 * g18_v10);
    g18_p00 = t48 * t375;
    g18_p11 = t49 * t376;
    g18_c0 = (g18_u01 ^ g18_m01) ^ g18_p00;
    g18_c1 = (g18_u10 ^ g18_m10) ^ g18_p11;
    g19_v01 = reg(t374 ^ rnd19);
    g19_v10 = reg(t373 ^ rnd19);
    g19_u01 = reg((~t46) * rnd19);
    g19_u10 = reg((~t47) * rnd19);
    g19_m01 = reg(t46 * g19_v01);
    g19_m10 = reg(t47 * g19_v10);
    g19_p00 = t46 * t373;
    g19_p11 = t47 * t374;
    g19_c0 = (g19_u01 ^ g19_m01) ^ g19_p00;
    g19_c1 = (g19_u10 ^ g19_m10) ^ g19_p11;
    t464 = t48 ^ t46;
    t465 = t49 ^ t47;
    t466 = t375 ^ t373;
    t467 = t376 ^ t374;
    g20_v01 = reg(t467 ^ rnd20);
    g20_v10 = reg(t466 ^ rnd20);
    g20_u01 = reg((~t464) * rnd20);
    g20_u10 = reg((~t465) * rnd20);
    g20_m01 = reg(t464 * g20_v01);
    g20_m10 = reg(t465 * g20_v10);
    g20_p00 = t464 * t466;
    g20_p11 = t465 * t467;
    g20_c0 = (g20_u01 ^ g20_m01) ^ g20_p00;
    g20_c1 = (g20_u10 ^ g20_m10) ^ g20_p11;
    t485 = g20_c0 ^ g19_c0;
    t486 = g20_c1 ^ g19_c1;
    g21_v01 = reg(t433 ^ rnd21);
    g21_v10 = reg(t432 ^ rnd21);
    g21_u01 = reg((~t36) * rnd21);
    g21_u10 = reg((~t37) * rnd21);
    g21_m01 = reg(t36 * g21_v01);
    g21_m10 = reg(t37 * g21_v10);
    g21_p00 = t36 * t432;
    g21_p11 = t37 * t433;
    g21_c0 = (g21_u01 ^ g21_m01) ^ g21_p00;
    g21_c1 = (g21_u10 ^ g21_m10) ^ g21_p11;
    g22_v01 = reg(t431 ^ rnd22);
    g22_v10 = reg(t430 ^ rnd22);
    g22_u01 = reg((~t34) * rnd22);
    g22_u10 = reg((~t35) * rnd22);
    g22_m01 = reg(t34 * g22_v01);
    g22_m10 = reg(t35 * g22_v10);
    g22_p00 = t34 * t430;
    g22_p11 = t35 * t431;
    g22_c0 = (g22_u01 ^ g22_m01) ^ g22_p00;
    g22_c1 = (g22_u10 ^ g22_m10) ^ g22_p11;
    t517 = t36 ^ t34;
    t518 = t37 ^ t35;
    t519 = t432 ^ t430;
    t520 = t433 ^ t431;
    g23_v01 = reg(t520 ^ rnd23);
    g23_v10 = reg(t519 ^ rnd23);
    g23_u01 = reg((~t517) * rnd23);
    g23_u10 = reg((~t518) * rnd23);
    g23_m01 = reg(t517 * g23_v01);
    g23_m10 = reg(t518 * g23_v10);
    g23_p00 = t517 * t519;
    g23_p11 = t518 * t520;
    g23_c0 = (g23_u01 ^ g23_m01) ^ g23_p00;
    g23_c1 = (g23_u10 ^ g23_m10) ^ g23_p11;
    t536 = g21_c0 ^ g22_c0;
    t537 = g21_c1 ^ g22_c1;
    t538 = g23_c0 ^ g22_c0;
    t539 = g23_c1 ^ g22_c1;
    t540 = t46 ^ t34;
    t541 = t47 ^ t35;
    t542 = t48 ^ t36;
    t543 = t49 ^ t37;
    t544 = t373 ^ t430;
    t545 = t374 ^ t431;
    t546 = t375 ^ t432;
    t547 = t376 ^ t433;
    g24_v01 = reg(t547 ^ rnd24);
    g24_v10 = reg(t546 ^ rnd24);
    g24_u01 = reg((~t542) * rnd24);
    g24_u10 = reg((~t543) * rnd24);
    g24_m01 = reg(t542 * g24_v01);
    g24_m10 = reg(t543 * g24_v10);
    g24_p00 = t542 * t546;
    g24_p11 = t543 * t547;
    g24_c0 = (g24_u01 ^ g24_m01) ^ g24_p00;
    g24_c1 = (g24_u10 ^ g24_m10) ^ g24_p11;
    g25_v01 = reg(t545 ^ rnd25);
    g25_v10 = reg(t544 ^ rnd25);
    g25_u01 = reg((~t540) * rnd25);
    g25_u10 = reg((~t541) * rnd25);
    g25_m01 = reg(t540 * g25_v01);
    g25_m10 = reg(t541 * g25_v10);
    g25_p00 = t540 * t544;
    g25_p11 = t541 * t545;
    g25_c0 = (g25_u01 ^ g25_m01) ^ g25_p00;
    g25_c1 = (g25_u10 ^ g25_m10) ^ g25_p11;
    t578 = t542 ^ t540;
    t579 = t543 ^ t541;
    t580 = t546 ^ t544;
    t581 = t547 ^ t545;
    g26_v01 = reg(t581 ^ rnd26);
    g26_v10 = reg(t580 ^ rnd26);
    g26_u01 = reg((~t578) * rnd26);
    g26_u10 = reg((~t579) * rnd26);
    g26_m01 = reg(t578 * g26_v01);
    g26_m10 = reg(t579 * g26_v10);
    g26_p00 = t578 * t580;
    g26_p11 = t579 * t581;
    g26_c0 = (g26_u01 ^ g26_m01) ^ g26_p00;
    g26_c1 = (g26_u10 ^ g26_m10) ^ g26_p11;
    t603 = t485 ^ t536;
    t604 = t486 ^ t537;
    t605 = ((g18_c0 ^ g19_c0) ^ t485) ^ t538;
    t606 = ((g18_c1 ^ g19_c1) ^ t486) ^ t539;
    t607 = (g24_c0 ^ g25_c0) ^ t536;
    t608 = (g24_c1 ^ g25_c1) ^ t537;
    t609 = (g26_c0 ^ g25_c0) ^ t538;
    t610 = (g26_c1 ^ g25_c1) ^ t539;
    t611 = t34 ^ t16;
    t612 = t35 ^ t17;
    t613 = t36 ^ t20;
    t614 = t37 ^ t21;
    t615 = t46 ^ t26;
    t616 = t47 ^ t27;
    t617 = t48 ^ t30;
    t618 = t49 ^ t31;
    g27_v01 = reg(t376 ^ rnd27);
    g27_v10 = reg(t375 ^ rnd27);
    g27_u01 = reg((~t617) * rnd27);
    g27_u10 = reg((~t618) * rnd27);
    g27_m01 = reg(t617 * g27_v01);
    g27_m10 = reg(t618 * g27_v10);
    g27_p00 = t617 * t375;
    g27_p11 = t618 * t376;
    g27_c0 = (g27_u01 ^ g27_m01) ^ g27_p00;
    g27_c1 = (g27_u10 ^ g27_m10) ^ g27_p11;
    g28_v01 = reg(t374 ^ rnd28);
    g28_v10 = reg(t373 ^ rnd28);
    g28_u01 = reg((~t615) * rnd28);
    g28_u10 = reg((~t616) * rnd28);
    g28_m01 = reg(t615 * g28_v01);
    g28_m10 = reg(t616 * g28_v10);
    g28_p00 = t615 * t373;
    g28_p11 = t616 * t374;
    g28_c0 = (g28_u01 ^ g28_m01) ^ g28_p00;
    g28_c1 = (g28_u10 ^ g28_m10) ^ g28_p11;
    t649 = t617 ^ t615;
    t650 = t618 ^ t616;
    t651 = t375 ^ t373;
    t652 = t376 ^ t374;
    g29_v01 = reg(t652 ^ rnd29);
    g29_v10 = reg(t651 ^ rnd29);
    g29_u01 = reg((~t649) * rnd29);
    g29_u10 = reg((~t650) * rnd29);
    g29_m01 = reg(t649 * g29_v01);
    g29_m10 = reg(t650 * g29_v10);
    g29_p00 = t649 * t651;
    g29_p11 = t650 * t652;
    g29_c0 = (g29_u01 ^ g29_m01) ^ g29_p00;
    g29_c1 = (g29_u10 ^ g29_m10) ^ g29_p11;
    t670 = g29_c0 ^ g28_c0;
    t671 = g29_c1 ^ g28_c1;
    g30_v01 = reg(t433 ^ rnd30);
    g30_v10 = reg(t432 ^ rnd30);
    g30_u01 = reg((~t613) * rnd30);
    g30_u10 = reg((~t614) * rnd30);
    g30_m01 = reg(t613 * g30_v01);
    g30_m10 = reg(t614 * g30_v10);
    g30_p00 = t613 * t432;
    g30_p11 = t614 * t433;
    g30_c0 = (g30_u01 ^ g30_m01) ^ g30_p00;
    g30_c1 = (g30_u10 ^ g30_m10) ^ g30_p11;
    g31_v01 = reg(t431 ^ rnd31);
    g31_v10 = reg(t430 ^ rnd31);
    g31_u01 = reg((~t611) * rnd31);
    g31_u10 = reg((~t612) * rnd31);
    g31_m01 = reg(t611 * g31_v01);
    g31_m10 = reg(t612 * g31_v10);
    g31_p00 = t611 * t430;
    g31_p11 = t612 * t431;
    g31_c0 = (g31_u01 ^ g31_m01) ^ g31_p00;
    g31_c1 = (g31_u10 ^ g31_m10) ^ g31_p11;
    t702 = t613 ^ t611;
    t703 = t614 ^ t612;
    t704 = t432 ^ t430;
    t705 = t433 ^ t431;
    g32_v01 = reg(t705 ^ rnd32);
    g32_v10 = reg(t704 ^ rnd32);
    g32_u01 = reg((~t702) * rnd32);
    g32_u10 = reg((~t703) * rnd32);
    g32_m01 = reg(t702 * g32_v01);
    g32_m10 = reg(t703 * g32_v10);
    g32_p00 = t702 * t704;
    g32_p11 = t703 * t705;
    g32_c0 = (g32_u01 ^ g32_m01) ^ g32_p00;
    g32_c1 = (g32_u10 ^ g32_m10) ^ g32_p11;
    t721 = g30_c0 ^ g31_c0;
    t722 = g30_c1 ^ g31_c1;
    t723 = g32_c0 ^ g31_c0;
    t724 = g32_c1 ^ g31_c1;
    t725 = t615 ^ t611;
    t726 = t616 ^ t612;
    t727 = t617 ^ t613;
    t728 = t618 ^ t614;
    t729 = t373 ^ t430;
    t730 = t374 ^ t431;
    t731 = t375 ^ t432;
    t732 = t376 ^ t433;
    g33_v01 = reg(t732 ^ rnd33);
    g33_v10 = reg(t731 ^ rnd33);
    g33_u01 = reg((~t727) * rnd33);
    g33_u10 = reg((~t728) * rnd33);
    g33_m01 = reg(t727 * g33_v01);
    g33_m10 = reg(t728 * g33_v10);
    g33_p00 = t727 * t731;
    g33_p11 = t728 * t732;
    g33_c0 = (g33_u01 ^ g33_m01) ^ g33_p00;
    g33_c1 = (g33_u10 ^ g33_m10) ^ g33_p11;
    g34_v01 = reg(t730 ^ rnd34);
    g34_v10 = reg(t729 ^ rnd34);
    g34_u01 = reg((~t725) * rnd34);
    g34_u10 = reg((~t726) * rnd34);
    g34_m01 = reg(t725 * g34_v01);
    g34_m10 = reg(t726 * g34_v10);
    g34_p00 = t725 * t729;
    g34_p11 = t726 * t730;
    g34_c0 = (g34_u01 ^ g34_m01) ^ g34_p00;
    g34_c1 = (g34_u10 ^ g34_m10) ^ g34_p11;
    t763 = t727 ^ t725;
    t764 = t728 ^ t726;
    t765 = t731 ^ t729;
    t766 = t732 ^ t730;
    g35_v01 = reg(t766 ^ rnd35);
    g35_v10 = reg(t765 ^ rnd35);
    g35_u01 = reg((~t763) * rnd35);
    g35_u10 = reg((~t764) * rnd35);
    g35_m01 = reg(t763 * g35_v01);
    g35_m10 = reg(t764 * g35_v10);
    g35_p00 = t763 * t765;
    g35_p11 = t764 * t766;
    g35_c0 = (g35_u01 ^ g35_m01) ^ g35_p00;
    g35_c1 = (g35_u10 ^ g35_m10) ^ g35_p11;
    t788 = t670 ^ t721;
    t789 = t671 ^ t722;
    t790 = ((g27_c0 ^ g28_c0) ^ t670) ^ t723;
    t791 = ((g27_c1 ^ g28_c1) ^ t671) ^ t724;
    t792 = (g33_c0 ^ g34_c0) ^ t721;
    t793 = (g33_c1 ^ g34_c1) ^ t722;
    t794 = (g35_c0 ^ g34_c0) ^ t723;
    t795 = (g35_c1 ^ g34_c1) ^ t724;
    *y0_1 = (((t789 ^ t791) ^ t795) ^ t604) ^ t608;
    *y1_1 = ((t789 ^ t793) ^ t604) ^ t606;
    *y2_0 = ((t788 ^ t794) ^ t605) ^ t609;
    *y2_1 = ((t789 ^ t795) ^ t606) ^ t610;
    *y3_0 = (((t788 ^ t790) ^ t794) ^ t603) ^ t609;
    *y3_1 = (((t789 ^ t791) ^ t795) ^ t604) ^ t610;
    *y4_0 = (((((t788 ^ t790) ^ t792) ^ t794) ^ t603) ^ t605) ^ t609;
    *y4_1 = (((((t789 ^ t791) ^ t793) ^ t795) ^ t604) ^ t606) ^ t610;
    *y5_1 = ((t793 ^ t604) ^ t606) ^ t608;
    *y6_1 = t604 ^ t606;
    *y7_0 = (t792 ^ t794) ^ t605;
    *y7_1 = (t793 ^ t795) ^ t606;
    *y0_0 = ~((((t788 ^ t790) ^ t794) ^ t603) ^ t607);
    *y1_0 = ~(((t788 ^ t792) ^ t603) ^ t605);
    *y5_0 = ~(((t792 ^ t603) ^ t605) ^ t607);
    *y6_0 = ~(t603 ^ t605);
    return 0;
}
