int aes_dom(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool x4_0, bool x4_1, bool x5_0, bool x5_1, bool x6_0, bool x6_1, bool x7_0, bool x7_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool rnd8, bool rnd9, bool rnd10, bool rnd11, bool rnd12, bool rnd13, bool rnd14, bool rnd15, bool rnd16, bool rnd17, bool rnd18, bool rnd19, bool rnd20, bool rnd21, bool rnd22, bool rnd23, bool rnd24, bool rnd25, bool rnd26, bool rnd27, bool rnd28, bool rnd29, bool rnd30, bool rnd31, bool rnd32, bool rnd33, bool rnd34, bool rnd35, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1, bool *y4_0, bool *y4_1, bool *y5_0, bool *y5_1, bool *y6_0, bool *y6_1, bool *y7_0, bool *y7_1)
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
    g0_p01 = t48 * t31;
    g0_i01 = reg(g0_p01 ^ rnd0);
    g0_p10 = t49 * t30;
    g0_i10 = reg(g0_p10 ^ rnd0);
    g0_p00 = t48 * t30;
    g0_p11 = t49 * t31;
    g0_c0 = g0_i01 ^ g0_p00;
    g0_c1 = g0_i10 ^ g0_p11;
    g1_p01 = t46 * t27;
    g1_i01 = reg(g1_p01 ^ rnd1);
    g1_p10 = t47 * t26;
    g1_i10 = reg(g1_p10 ^ rnd1);
    g1_p00 = t46 * t26;
    g1_p11 = t47 * t27;
    g1_c0 = g1_i01 ^ g1_p00;
    g1_c1 = g1_i10 ^ g1_p11;
    t68 = t48 ^ t46;
    t69 = t49 ^ t47;
    t70 = t30 ^ t26;
    t71 = t31 ^ t27;
    g2_p01 = t68 * t71;
    g2_i01 = reg(g2_p01 ^ rnd2);
    g2_p10 = t69 * t70;
    g2_i10 = reg(g2_p10 ^ rnd2);
    g2_p00 = t68 * t70;
    g2_p11 = t69 * t71;
    g2_c0 = g2_i01 ^ g2_p00;
    g2_c1 = g2_i10 ^ g2_p11;
    t83 = g2_c0 ^ g1_c0;
    t84 = g2_c1 ^ g1_c1;
    g3_p01 = t36 * t21;
    g3_i01 = reg(g3_p01 ^ rnd3);
    g3_p10 = t37 * t20;
    g3_i10 = reg(g3_p10 ^ rnd3);
    g3_p00 = t36 * t20;
    g3_p11 = t37 * t21;
    g3_c0 = g3_i01 ^ g3_p00;
    g3_c1 = g3_i10 ^ g3_p11;
    g4_p01 = t34 * t17;
    g4_i01 = reg(g4_p01 ^ rnd4);
    g4_p10 = t35 * t16;
    g4_i10 = reg(g4_p10 ^ rnd4);
    g4_p00 = t34 * t16;
    g4_p11 = t35 * t17;
    g4_c0 = g4_i01 ^ g4_p00;
    g4_c1 = g4_i10 ^ g4_p11;
    t103 = t36 ^ t34;
    t104 = t37 ^ t35;
    t105 = t20 ^ t16;
    t106 = t21 ^ t17;
    g5_p01 = t103 * t106;
    g5_i01 = reg(g5_p01 ^ rnd5);
    g5_p10 = t104 * t105;
    g5_i10 = reg(g5_p10 ^ rnd5);
    g5_p00 = t103 * t105;
    g5_p11 = t104 * t106;
    g5_c0 = g5_i01 ^ g5_p00;
    g5_c1 = g5_i10 ^ g5_p11;
    t116 = g3_c0 ^ g4_c0;
    t117 = g3_c1 ^ g4_c1;
    t118 = g5_c0 ^ g4_c0;
    t119 = g5_c1 ^ g4_c1;
    t120 = t46 ^ t34;
    t121 = t47 ^ t35;
    t122 = t48 ^ t36;
    t123 = t49 ^ t37;
    t124 = t26 ^ t16;
    t125 = t27 ^ t17;
    t126 = t30 ^ t20;
    t127 = t31 ^ t21;
    g6_p01 = t122 * t127;
    g6_i01 = reg(g6_p01 ^ rnd6);
    g6_p10 = t123 * t126;
    g6_i10 = reg(g6_p10 ^ rnd6);
    g6_p00 = t122 * t126;
    g6_p11 = t123 * t127;
    g6_c0 = g6_i01 ^ g6_p00;
    g6_c1 = g6_i10 ^ g6_p11;
    g7_p01 = t120 * t125;
    g7_i01 = reg(g7_p01 ^ rnd7);
    g7_p10 = t121 * t124;
    g7_i10 = reg(g7_p10 ^ rnd7);
    g7_p00 = t120 * t124;
    g7_p11 = t121 * t125;
    g7_c0 = g7_i01 ^ g7_p00;
    g7_c1 = g7_i10 ^ g7_p11;
    t146 = t122 ^ t120;
    t147 = t123 ^ t121;
    t148 = t126 ^ t124;
    t149 = t127 ^ t125;
    g8_p01 = t146 * t149;
    g8_i01 = reg(g8_p01 ^ rnd8);
    g8_p10 = t147 * t148;
    g8_i10 = reg(g8_p10 ^ rnd8);
    g8_p00 = t146 * t148;
    g8_p11 = t147 * t149;
    g8_c0 = g8_i01 ^ g8_p00;
    g8_c1 = g8_i10 ^ g8_p11;
    t197 = (((t46 ^ t16) ^ t20) ^ t30) ^ (t83 ^ t116);
    t198 = (((t47 ^ t17) ^ t21) ^ t31) ^ (t84 ^ t117);
    t199 = (((t46 ^ t48) ^ t20) ^ t26) ^ (((g0_c0 ^ g1_c0) ^ t83) ^ t118);
    t200 = (((t47 ^ t49) ^ t21) ^ t27) ^ (((g0_c1 ^ g1_c1) ^ t84) ^ t119);
    t201 = ((((t36 ^ t46) ^ t48) ^ t26) ^ t30) ^ ((g6_c0 ^ g7_c0) ^ t116);
    t202 = ((((t37 ^ t47) ^ t49) ^ t27) ^ t31) ^ ((g6_c1 ^ g7_c1) ^ t117);
    t203 = ((t34 ^ t48) ^ t30) ^ ((g8_c0 ^ g7_c0) ^ t118);
    t204 = ((t35 ^ t49) ^ t31) ^ ((g8_c1 ^ g7_c1) ^ t119);
    g9_p01 = t203 * t200;
    g9_i01 = reg(g9_p01 ^ rnd9);
    g9_p10 = t204 * t199;
    g9_i10 = reg(g9_p10 ^ rnd9);
    g9_p00 = t203 * t199;
    g9_p11 = t204 * t200;
    g9_c0 = g9_i01 ^ g9_p00;
    g9_c1 = g9_i10 ^ g9_p11;
    g10_p01 = t201 * t198;
    g10_i01 = reg(g10_p01 ^ rnd10);
    g10_p10 = t202 * t197;
    g10_i10 = reg(g10_p10 ^ rnd10);
    g10_p00 = t201 * t197;
    g10_p11 = t202 * t198;
    g10_c0 = g10_i01 ^ g10_p00;
    g10_c1 = g10_i10 ^ g10_p11;
    t223 = t203 ^ t201;
    t224 = t204 ^ t202;
    t225 = t199 ^ t197;
    t226 = t200 ^ t198;
    g11_p01 = t223 * t226;
    g11_i01 = reg(g11_p01 ^ rnd11);
    g11_p10 = t224 * t225;
    g11_i10 = reg(g11_p10 ^ rnd11);
    g11_p00 = t223 * t225;
    g11_p11 = t224 * t226;
    g11_c0 = g11_i01 ^ g11_p00;
    g11_c1 = g11_i10 ^ g11_p11;
    t248 = (t201 ^ t199) ^ (g11_c0 ^ g10_c0);
    t249 = (t202 ^ t200) ^ (g11_c1 ^ g10_c1);
    t250 = (((t203 ^ t197) ^ t199) ^ (g9_c0 ^ g10_c0)) ^ t248;
    t251 = (((t204 ^ t198) ^ t200) ^ (g9_c1 ^ g10_c1)) ^ t249;
    g12_p01 = t203 * t249;
    g12_i01 = reg(g12_p01 ^ rnd12);
    g12_p10 = t204 * t248;
    g12_i10 = reg(g12_p10 ^ rnd12);
    g12_p00 = t203 * t248;
    g12_p11 = t204 * t249;
    g12_c0 = g12_i01 ^ g12_p00;
    g12_c1 = g12_i10 ^ g12_p11;
    g13_p01 = t201 * t251;
    g13_i01 = reg(g13_p01 ^ rnd13);
    g13_p10 = t202 * t250;
    g13_i10 = reg(g13_p10 ^ rnd13);
    g13_p00 = t201 * t250;
    g13_p11 = t202 * t251;
    g13_c0 = g13_i01 ^ g13_p00;
    g13_c1 = g13_i10 ^ g13_p11;
    t270 = t203 ^ t201;
    t271 = t204 ^ t202;
    t272 = t248 ^ t250;
    t273 = t249 ^ t251;
    g14_p01 = t270 * t273;
    g14_i01 = reg(g14_p01 ^ rnd14);
    g14_p10 = t271 * t272;
    g14_i10 = reg(g14_p10 ^ rnd14);
    g14_p00 = t270 * t272;
    g14_p11 = t271 * t273;
    g14_c0 = g14_i01 ^ g14_p00;
    g14_c1 = g14_i10 ^ g14_p11;
    t283 = g12_c0 ^ g13_c0;
    t284 = g12_c1 ^ g13_c1;
    t285 = g14_c0 ^ g13_c0;
    t286 = g14_c1 ^ g13_c1;
    t287 = t201 ^ t197;
    t288 = t202 ^ t198;
    t289 = t203 ^ t199;
    t290 = t204 ^ t200;
    g15_p01 = t289 * t249;
    g15_i01 = reg(g15_p01 ^ rnd15);
    g15_p10 = t290 * t248;
    g15_i10 = reg(g15_p10 ^ rnd15);
    g15_p00 = t289 * t248;
    g15_p11 = t290 * t249;
    g15_c0 = g15_i01 ^ g15_p00;
    g15_c1 = g15_i10 ^ g15_p11;
    g16_p01 = t287 * t251;
    g16_i01 = reg(g16_p01 ^ rnd16);
    g16_p10 = t288 * t250;
    g16_i10 = reg(g16_p10 ^ rnd16);
    g16_p00 = t287 * t250;
    g16_p11 = t288 * t251;
    g16_c0 = g16_i01 ^ g16_p00;
    g16_c1 = g16_i10 ^ g16_p11;
    t309 = t289 ^ t287;
    t310 = t290 ^ t288;
    t311 = t248 ^ t250;
    t312 = t249 ^ t251;
    g17_p01 = t309 * t312;
    g17_i01 = reg(g17_p01 ^ rnd17);
    g17_p10 = t310 * t311;
    g17_i10 = reg(g17_p10 ^ rnd17);
    g17_p00 = t309 * t311;
    g17_p11 = t310 * t312;
    g17_c0 = g17_i01 ^ g17_p00;
    g17_c1 = g17_i10 ^ g17_p11;
    t322 = g15_c0 ^ g16_c0;
    t323 = g15_c1 ^ g16_c1;
    t324 = g17_c0 ^ g16_c0;
    t325 = g17_c1 ^ g16_c1;
    g18_p01 = t48 * t286;
    g18_i01 = reg(g18_p01 ^ rnd18);
    g18_p10 = t49 * t285;
    g18_i10 = reg(g18_p10 ^ rnd18);
    g18_p00 = t48 * t285;
    g18_p11 = t49 * t286;
    g18_c0 = g18_i01 ^ g18_p00;
    g18_c1 = g18_i10 ^ g18_p11;
    g19_p01 = t46 * t284;
    g19_i01 = reg(g19_p01 ^ rnd19);
    g19_p10 = t47 * t283;
    g19_i10 = reg(g19_p10 ^ rnd19);
    g19_p00 = t46 * t283;
    g19_p11 = t47 * t284;
    g19_c0 = g19_i01 ^ g19_p00;
    g19_c1 = g19_i10 ^ g19_p11;
    t344 = t48 ^ t46;
    t345 = t49 ^ t47;
    t346 = t285 ^ t283;
    t347 = t286 ^ t284;
    g20_p01 = t344 * t347;
    g20_i01 = reg(g20_p01 ^ rnd20);
    g20_p10 = t345 * t346;
    g20_i10 = reg(g20_p10 ^ rnd20);
    g20_p00 = t344 * t346;
    g20_p11 = t345 * t347;
    g20_c0 = g20_i01 ^ g20_p00;
    g20_c1 = g20_i10 ^ g20_p11;
    t359 = g20_c0 ^ g19_c0;
    t360 = g20_c1 ^ g19_c1;
    g21_p01 = t36 * t325;
    g21_i01 = reg(g21_p01 ^ rnd21);
    g21_p10 = t37 * t324;
    g21_i10 = reg(g21_p10 ^ rnd21);
    g21_p00 = t36 * t324;
    g21_p11 = t37 * t325;
    g21_c0 = g21_i01 ^ g21_p00;
    g21_c1 = g21_i10 ^ g21_p11;
    g22_p01 = t34 * t323;
    g22_i01 = reg(g22_p01 ^ rnd22);
    g22_p10 = t35 * t322;
    g22_i10 = reg(g22_p10 ^ rnd22);
    g22_p00 = t34 * t322;
    g22_p11 = t35 * t323;
    g22_c0 = g22_i01 ^ g22_p00;
    g22_c1 = g22_i10 ^ g22_p11;
    t379 = t36 ^ t34;
    t380 = t37 ^ t35;
    t381 = t324 ^ t322;
    t382 = t325 ^ t323;
    g23_p01 = t379 * t382;
    g23_i01 = reg(g23_p01 ^ rnd23);
    g23_p10 = t380 * t381;
    g23_i10 = reg(g23_p10 ^ rnd23);
    g23_p00 = t379 * t381;
    g23_p11 = t380 * t382;
    g23_c0 = g23_i01 ^ g23_p00;
    g23_c1 = g23_i10 ^ g23_p11;
    t392 = g21_c0 ^ g22_c0;
    t393 = g21_c1 ^ g22_c1;
    t394 = g23_c0 ^ g22_c0;
    t395 = g23_c1 ^ g22_c1;
    t396 = t46 ^ t34;
    t397 = t47 ^ t35;
    t398 = t48 ^ t36;
    t399 = t49 ^ t37;
    t400 = t283 ^ t322;
    t401 = t284 ^ t323;
    t402 = t285 ^ t324;
    t403 = t286 ^ t325;
    g24_p01 = t398 * t403;
    g24_i01 = reg(g24_p01 ^ rnd24);
    g24_p10 = t399 * t402;
    g24_i10 = reg(g24_p10 ^ rnd24);
    g24_p00 = t398 * t402;
    g24_p11 = t399 * t403;
    g24_c0 = g24_i01 ^ g24_p00;
    g24_c1 = g24_i10 ^ g24_p11;
    g25_p01 = t396 * t401;
    g25_i01 = reg(g25_p01 ^ rnd25);
    g25_p10 = t397 * t400;
    g25_i10 = reg(g25_p10 ^ rnd25);
    g25_p00 = t396 * t400;
    g25_p11 = t397 * t401;
    g25_c0 = g25_i01 ^ g25_p00;
    g25_c1 = g25_i10 ^ g25_p11;
    t422 = t398 ^ t396;
    t423 = t399 ^ t397;
    t424 = t402 ^ t400;
    t425 = t403 ^ t401;
    g26_p01 = t422 * t425;
    g26_i01 = reg(g26_p01 ^ rnd26);
    g26_p10 = t423 * t424;
    g26_i10 = reg(g26_p10 ^ rnd26);
    g26_p00 = t422 * t424;
    g26_p11 = t423 * t425;
    g26_c0 = g26_i01 ^ g26_p00;
    g26_c1 = g26_i10 ^ g26_p11;
    t441 = t359 ^ t392;
    t442 = t360 ^ t393;
    t443 = ((g18_c0 ^ g19_c0) ^ t359) ^ t394;
    t444 = ((g18_c1 ^ g19_c1) ^ t360) ^ t395;
    t445 = (g24_c0 ^ g25_c0) ^ t392;
    t446 = (g24_c1 ^ g25_c1) ^ t393;
    t447 = (g26_c0 ^ g25_c0) ^ t394;
    t448 = (g26_c1 ^ g25_c1) ^ t395;
    t449 = t34 ^ t16;
    t450 = t35 ^ t17;
    t451 = t36 ^ t20;
    t452 = t37 ^ t21;
    t453 = t46 ^ t26;
    t454 = t47 ^ t27;
    t455 = t48 ^ t30;
    t456 = t49 ^ t31;
    g27_p01 = t455 * t286;
    g27_i01 = reg(g27_p01 ^ rnd27);
    g27_p10 = t456 * t285;
    g27_i10 = reg(g27_p10 ^ rnd27);
    g27_p00 = t455 * t285;
    g27_p11 = t456 * t286;
    g27_c0 = g27_i01 ^ g27_p00;
    g27_c1 = g27_i10 ^ g27_p11;
    g28_p01 = t453 * t284;
    g28_i01 = reg(g28_p01 ^ rnd28);
    g28_p10 = t454 * t283;
    g28_i10 = reg(g28_p10 ^ rnd28);
    g28_p00 = t453 * t283;
    g28_p11 = t454 * t284;
    g28_c0 = g28_i01 ^ g28_p00;
    g28_c1 = g28_i10 ^ g28_p11;
    t475 = t455 ^ t453;
    t476 = t456 ^ t454;
    t477 = t285 ^ t283;
    t478 = t286 ^ t284;
    g29_p01 = t475 * t478;
    g29_i01 = reg(g29_p01 ^ rnd29);
    g29_p10 = t476 * t477;
    g29_i10 = reg(g29_p10 ^ rnd29);
    g29_p00 = t475 * t477;
    g29_p11 = t476 * t478;
    g29_c0 = g29_i01 ^ g29_p00;
    g29_c1 = g29_i10 ^ g29_p11;
    t490 = g29_c0 ^ g28_c0;
    t491 = g29_c1 ^ g28_c1;
    g30_p01 = t451 * t325;
    g30_i01 = reg(g30_p01 ^ rnd30);
    g30_p10 = t452 * t324;
    g30_i10 = reg(g30_p10 ^ rnd30);
    g30_p00 = t451 * t324;
    g30_p11 = t452 * t325;
    g30_c0 = g30_i01 ^ g30_p00;
    g30_c1 = g30_i10 ^ g30_p11;
    g31_p01 = t449 * t323;
    g31_i01 = reg(g31_p01 ^ rnd31);
    g31_p10 = t450 * t322;
    g31_i10 = reg(g31_p10 ^ rnd31);
    g31_p00 = t449 * t322;
    g31_p11 = t450 * t323;
    g31_c0 = g31_i01 ^ g31_p00;
    g31_c1 = g31_i10 ^ g31_p11;
    t510 = t451 ^ t449;
    t511 = t452 ^ t450;
    t512 = t324 ^ t322;
    t513 = t325 ^ t323;
    g32_p01 = t510 * t513;
    g32_i01 = reg(g32_p01 ^ rnd32);
    g32_p10 = t511 * t512;
    g32_i10 = reg(g32_p10 ^ rnd32);
    g32_p00 = t510 * t512;
    g32_p11 = t511 * t513;
    g32_c0 = g32_i01 ^ g32_p00;
    g32_c1 = g32_i10 ^ g32_p11;
    t523 = g30_c0 ^ g31_c0;
    t524 = g30_c1 ^ g31_c1;
    t525 = g32_c0 ^ g31_c0;
    t526 = g32_c1 ^ g31_c1;
    t527 = t453 ^ t449;
    t528 = t454 ^ t450;
    t529 = t455 ^ t451;
    t530 = t456 ^ t452;
    t531 = t283 ^ t322;
    t532 = t284 ^ t323;
    t533 = t285 ^ t324;
    t534 = t286 ^ t325;
    g33_p01 = t529 * t534;
    g33_i01 = reg(g33_p01 ^ rnd33);
    g33_p10 = t530 * t533;
    g33_i10 = reg(g33_p10 ^ rnd33);
    g33_p00 = t529 * t533;
    g33_p11 = t530 * t534;
    g33_c0 = g33_i01 ^ g33_p00;
    g33_c1 = g33_i10 ^ g33_p11;
    g34_p01 = t527 * t532;
    g34_i01 = reg(g34_p01 ^ rnd34);
    g34_p10 = t528 * t531;
    g34_i10 = reg(g34_p10 ^ rnd34);
    g34_p00 = t527 * t531;
    g34_p11 = t528 * t532;
    g34_c0 = g34_i01 ^ g34_p00;
    g34_c1 = g34_i10 ^ g34_p11;
    t553 = t529 ^ t527;
    t554 = t530 ^ t528;
    t555 = t533 ^ t531;
    t556 = t534 ^ t532;
    g35_p01 = t553 * t556;
    g35_i01 = reg(g35_p01 ^ rnd35);
    g35_p10 = t554 * t555;
    g35_i10 = reg(g35_p10 ^ rnd35);
    g35_p00 = t553 * t555;
    g35_p11 = t554 * t556;
    g35_c0 = g35_i01 ^ g35_p00;
    g35_c1 = g35_i10 ^ g35_p11;
    t572 = t490 ^ t523;
    t573 = t491 ^ t524;
    t574 = ((g27_c0 ^ g28_c0) ^ t490) ^ t525;
    t575 = ((g27_c1 ^ g28_c1) ^ t491) ^ t526;
    t576 = (g33_c0 ^ g34_c0) ^ t523;
    t577 = (g33_c1 ^ g34_c1) ^ t524;
    t578 = (g35_c0 ^ g34_c0) ^ t525;
    t579 = (g35_c1 ^ g34_c1) ^ t526;
    *y0_1 = (((t573 ^ t575) ^ t579) ^ t442) ^ t446;
    *y1_1 = ((t573 ^ t577) ^ t442) ^ t444;
    *y2_0 = ((t572 ^ t578) ^ t443) ^ t447;
    *y2_1 = ((t573 ^ t579) ^ t444) ^ t448;
    *y3_0 = (((t572 ^ t574) ^ t578) ^ t441) ^ t447;
    *y3_1 = (((t573 ^ t575) ^ t579) ^ t442) ^ t448;
    *y4_0 = (((((t572 ^ t574) ^ t576) ^ t578) ^ t441) ^ t443) ^ t447;
    *y4_1 = (((((t573 ^ t575) ^ t577) ^ t579) ^ t442) ^ t444) ^ t448;
    *y5_1 = ((t577 ^ t442) ^ t444) ^ t446;
    *y6_1 = t442 ^ t444;
    *y7_0 = (t576 ^ t578) ^ t443;
    *y7_1 = (t577 ^ t579) ^ t444;
    *y0_0 = ~((((t572 ^ t574) ^ t578) ^ t441) ^ t445);
    *y1_0 = ~(((t572 ^ t576) ^ t441) ^ t443);
    *y5_0 = ~(((t576 ^ t441) ^ t443) ^ t445);
    *y6_0 = ~(t441 ^ t443);
    return 0;
}
