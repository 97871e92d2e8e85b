int aes_comar(bool x0_0, bool x0_1, bool x1_0, bool x1_1, bool x2_0, bool x2_1, bool x3_0, bool x3_1, bool x4_0, bool x4_1, bool x5_0, bool x5_1, bool x6_0, bool x6_1, bool x7_0, bool x7_1, bool rnd0, bool rnd1, bool rnd2, bool rnd3, bool rnd4, bool rnd5, bool rnd6, bool rnd7, bool rnd8, bool rnd9, bool rnd10, bool rnd11, bool rnd12, bool rnd13, bool rnd14, bool rnd15, bool rnd16, bool rnd17, bool rnd18, bool rnd19, bool rnd20, bool rnd21, bool rnd22, bool rnd23, bool rnd24, bool rnd25, bool rnd26, bool rnd27, bool rnd28, bool rnd29, bool rnd30, bool rnd31, bool rnd32, bool rnd33, bool rnd34, bool rnd35, bool rnd36, bool rnd37, bool rnd38, bool rnd39, bool rnd40, bool rnd41, bool rnd42, bool rnd43, bool rnd44, bool rnd45, bool rnd46, bool rnd47, bool rnd48, bool rnd49, bool rnd50, bool rnd51, bool rnd52, bool rnd53, bool rnd54, bool rnd55, bool rnd56, bool rnd57, bool rnd58, bool rnd59, bool rnd60, bool rnd61, bool rnd62, bool rnd63, bool rnd64, bool rnd65, bool rnd66, bool rnd67, bool rnd68, bool rnd69, bool rnd70, bool rnd71, bool rnd72, bool rnd73, bool rnd74, bool rnd75, bool rnd76, bool rnd77, bool rnd78, bool rnd79, bool rnd80, bool rnd81, bool rnd82, bool rnd83, bool rnd84, bool rnd85, bool rnd86, bool rnd87, bool rnd88, bool rnd89, bool rnd90, bool rnd91, bool rnd92, bool rnd93, bool rnd94, bool rnd95, bool rnd96, bool rnd97, bool rnd98, bool rnd99, bool rnd100, bool rnd101, bool rnd102, bool rnd103, bool rnd104, bool rnd105, bool rnd106, bool rnd107, bool rnd108, bool rnd109, bool rnd110, bool rnd111, bool rnd112, bool rnd113, bool rnd114, bool rnd115, bool rnd116, bool rnd117, bool rnd118, bool rnd119, bool rnd120, bool rnd121, bool rnd122, bool rnd123, bool rnd124, bool rnd125, bool rnd126, bool rnd127, bool rnd128, bool rnd129, bool rnd130, bool rnd131, bool rnd132, bool rnd133, bool rnd134, bool rnd135, bool rnd136, bool rnd137, bool rnd138, bool rnd139, bool rnd140, bool rnd141, bool rnd142, bool rnd143, bool rnd144, bool rnd145, bool rnd146, bool rnd147, bool rnd148, bool rnd149, bool rnd150, bool rnd151, bool rnd152, bool rnd153, bool rnd154, bool rnd155, bool rnd156, bool rnd157, bool rnd158, bool rnd159, bool rnd160, bool rnd161, bool rnd162, bool rnd163, bool rnd164, bool rnd165, bool rnd166, bool rnd167, bool rnd168, bool rnd169, bool rnd170, bool rnd171, bool rnd172, bool rnd173, bool rnd174, bool rnd175, bool rnd176, bool rnd177, bool rnd178, bool rnd179, bool rnd180, bool rnd181, bool rnd182, bool rnd183, bool rnd184, bool rnd185, bool rnd186, bool rnd187, bool rnd188, bool rnd189, bool rnd190, bool rnd191, bool rnd192, bool rnd193, bool rnd194, bool rnd195, bool rnd196, bool rnd197, bool rnd198, bool rnd199, bool rnd200, bool rnd201, bool rnd202, bool rnd203, bool rnd204, bool rnd205, bool rnd206, bool rnd207, bool rnd208, bool rnd209, bool rnd210, bool rnd211, bool rnd212, bool rnd213, bool rnd214, bool rnd215, bool *y0_0, bool *y0_1, bool *y1_0, bool *y1_1, bool *y2_0, bool *y2_1, bool *y3_0, bool *y3_1, bool *y4_0, bool *y4_1, bool *y5_0, bool *y5_1, bool *y6_0, bool *y6_1, bool *y7_0, bool *y7_1)
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
    g0_ar0 = t48 ^ rnd0;
    g0_ar1 = t49 ^ rnd0;
    g0_br0 = reg(t30 ^ rnd1);
    g0_br1 = reg(t31 ^ rnd1);
    g0_s00 = reg((g0_ar0 * g0_br0) ^ rnd2);
    g0_s01 = reg((g0_ar0 * g0_br1) ^ rnd3);
    g0_s10 = reg((g0_ar1 * g0_br0) ^ rnd4);
    g0_s11 = reg((g0_ar1 * g0_br1) ^ rnd5);
    g0_c0 = ((g0_s00 ^ g0_s01) ^ g0_s10) ^ g0_s11;
    g0_c1 = reg(((rnd2 ^ rnd3) ^ rnd4) ^ rnd5);
    g1_ar0 = t46 ^ rnd6;
    g1_ar1 = t47 ^ rnd6;
    g1_br0 = reg(t26 ^ rnd7);
    g1_br1 = reg(t27 ^ rnd7);
    g1_s00 = reg((g1_ar0 * g1_br0) ^ rnd8);
    g1_s01 = reg((g1_ar0 * g1_br1) ^ rnd9);
    g1_s10 = reg((g1_ar1 * g1_br0) ^ rnd10);
    g1_s11 = reg((g1_ar1 * g1_br1) ^ rnd11);
    g1_c0 = ((g1_s00 ^ g1_s01) ^ g1_s10) ^ g1_s11;
    g1_c1 = reg(((rnd8 ^ rnd9) ^ rnd10) ^ rnd11);
    g2_ar0 = (t48 ^ t46) ^ rnd12;
    g2_ar1 = (t49 ^ t47) ^ rnd12;
    g2_br0 = reg((t30 ^ t26) ^ rnd13);
    g2_br1 = reg((t31 ^ t27) ^ rnd13);
    g2_s00 = reg((g2_ar0 * g2_br0) ^ rnd14);
    g2_s01 = reg((g2_ar0 * g2_br1) ^ rnd15);
    g2_s10 = reg((g2_ar1 * g2_br0) ^ rnd16);
    g2_s11 = reg((g2_ar1 * g2_br1) ^ rnd17);
    g2_c0 = ((g2_s00 ^ g2_s01) ^ g2_s10) ^ g2_s11;
    g2_c1 = reg(((rnd14 ^ rnd15) ^ rnd16) ^ rnd17);
    t128 = g2_c0 ^ g1_c0;
    t129 = g2_c1 ^ g1_c1;
    g3_ar0 = t36 ^ rnd18;
    g3_ar1 = t37 ^ rnd18;
    g3_br0 = reg(t20 ^ rnd19);
    g3_br1 = reg(t21 ^ rnd19);
    g3_s00 = reg((g3_ar0 * g3_br0) ^ rnd20);
    g3_s01 = reg((g3_ar0 * g3_br1) ^ rnd21);
    g3_s10 = reg((g3_ar1 * g3_br0) ^ rnd22);
    g3_s11 = reg((g3_ar1 * g3_br1) ^ rnd23);
    g3_c0 = ((g3_s00 ^ g3_s01) ^ g3_s10) ^ g3_s11;
    g3_c1 = reg(((rnd20 ^ rnd21) ^ rnd22) ^ rnd23);
    g4_ar0 = t34 ^ rnd24;
    g4_ar1 = t35 ^ rnd24;
    g4_br0 = reg(t16 ^ rnd25);
    g4_br1 = reg(t17 ^ rnd25);
    g4_s00 = reg((g4_ar0 * g4_br0) ^ rnd26);
    g4_s01 = reg((g4_ar0 * g4_br1) ^ rnd27);
    g4_s10 = reg((g4_ar1 * g4_br0) ^ rnd28);
    g4_s11 = reg((g4_ar1 * g4_br1) ^ rnd29);
    g4_c0 = ((g4_s00 ^ g4_s01) ^ g4_s10) ^ g4_s11;
    g4_c1 = reg(((rnd26 ^ rnd27) ^ rnd28) ^ rnd29);
    g5_ar0 = (t36 ^ t34) ^ rnd30;
    g5_ar1 = (t37 ^ t35) ^ rnd30;
    g5_br0 = reg((t20 ^ t16) ^ rnd31);
    g5_br1 = reg((t21 ^ t17) ^ rnd31);
    g5_s00 = reg((g5_ar0 * g5_br0) ^ rnd32);
    g5_s01 = reg((g5_ar0 * g5_br1) ^ rnd33);
    g5_s10 = reg((g5_ar1 * g5_br0) ^ rnd34);
    g5_s11 = reg((g5_ar1 * g5_br1) ^ rnd35);
    g5_c0 = ((g5_s00 ^ g5_s01) ^ g5_s10) ^ g5_s11;
    g5_c1 = reg(((rnd32 ^ rnd33) ^ rnd34) ^ rnd35);
    t206 = g3_c0 ^ g4_c0;
    t207 = g3_c1 ^ g4_c1;
    t208 = g5_c0 ^ g4_c0;
    t209 = g5_c1 ^ g4_c1;
    t210 = t46 ^ t34;
    t211 = t47 ^ t35;
    t212 = t48 ^ t36;
    t213 = t49 ^ t37;
    t214 = t26 ^ t16;
    t215 = t27 ^ t17;
    t216 = t30 ^ t20;
    t217 = t31 ^ t21;
    g6_ar0 = t212 ^ rnd36;
    g6_ar1 = t213 ^ rnd36;
    g6_br0 = reg(t216 ^ rnd37);
    g6_br1 = reg(t217 ^ rnd37);
    g6_s00 = reg((g6_ar0 * g6_br0) ^ rnd38);
    g6_s01 = reg((g6_ar0 * g6_br1) ^ rnd39);
    g6_s10 = reg((g6_ar1 * g6_br0) ^ rnd40);
    g6_s11 = reg((g6_ar1 * g6_br1) ^ rnd41);
    g6_c0 = ((g6_s00 ^ g6_s01) ^ g6_s10) ^ g6_s11;
    g6_c1 = reg(((rnd38 ^ rnd39) ^ rnd40) ^ rnd41);
    g7_ar0 = t210 ^ rnd42;
    g7_ar1 = t211 ^ rnd42;
    g7_br0 = reg(t214 ^ rnd43);
    g7_br1 = reg(t215 ^ rnd43);
    g7_s00 = reg((g7_ar0 * g7_br0) ^ rnd44);
    g7_s01 = reg((g7_ar0 * g7_br1) ^ rnd45);
    g7_s10 = reg((g7_ar1 * g7_br0) ^ rnd46);
    g7_s11 = reg((g7_ar1 * g7_br1) ^ rnd47);
    g7_c0 = ((g7_s00 ^ g7_s01) ^ g7_s10) ^ g7_s11;
    g7_c1 = reg(((rnd44 ^ rnd45) ^ rnd46) ^ rnd47);
    g8_ar0 = (t212 ^ t210) ^ rnd48;
    g8_ar1 = (t213 ^ t211) ^ rnd48;
    g8_br0 = reg((t216 ^ t214) ^ rnd49);
    g8_br1 = reg((t217 ^ t215) ^ rnd49);
    g8_s00 = reg((g8_ar0 * g8_br0) ^ rnd50);
    g8_s01 = reg((g8_ar0 * g8_br1) ^ rnd51);
    g8_s10 = reg((g8_ar1 * g8_br0) ^ rnd52);
    g8_s11 = reg((g8_ar1 * g8_br1) ^ rnd53);
    g8_c0 = ((g8_s00 ^ g8_s01) ^ g8_s10) ^ g8_s11;
    g8_c1 = reg(((rnd50 ^ rnd51) ^ rnd52) ^ rnd53);
    t332 = (((t46 ^ t16) ^ t20) ^ t30) ^ (t128 ^ t206);
    t333 = (((t47 ^ t17) ^ t21) ^ t31) ^ (t129 ^ t207);
    t334 = (((t46 ^ t48) ^ t20) ^ t26) ^ (((g0_c0 ^ g1_c0) ^ t128) ^ t208);
    t335 = (((t47 ^ t49) ^ t21) ^ t27) ^ (((g0_c1 ^ g1_c1) ^ t129) ^ t209);
    t336 = ((((t36 ^ t46) ^ t48) ^ t26) ^ t30) ^ ((g6_c0 ^ g7_c0) ^ t206);
    t337 = ((((t37 ^ t47) ^ t49) ^ t27) ^ t31) ^ ((g6_c1 ^ g7_c1) ^ t207);
    t338 = ((t34 ^ t48) ^ t30) ^ ((g8_c0 ^ g7_c0) ^ t208);
    t339 = ((t35 ^ t49) ^ t31) ^ ((g8_c1 ^ g7_c1) ^ t209);
    g9_ar0 = t338 ^ rnd54;
    g9_ar1 = t339 ^ rnd54;
    g9_br0 = reg(t334 ^ rnd55);
    g9_br1 = reg(t335 ^ rnd55);
    g9_s00 = reg((g9_ar0 * g9_br0) ^ rnd56);
    g9_s01 = reg((g9_ar0 * g9_br1) ^ rnd57);
    g9_s10 = reg((g9_ar1 * g9_br0) ^ rnd58);
    g9_s11 = reg((g9_ar1 * g9_br1) ^ rnd59);
    g9_c0 = ((g9_s00 ^ g9_s01) ^ g9_s10) ^ g9_s11;
    g9_c1 = reg(((rnd56 ^ rnd57) ^ rnd58) ^ rnd59);
    g10_ar0 = t336 ^ rnd60;
    g10_ar1 = t337 ^ rnd60;
    g10_br0 = reg(t332 ^ rnd61);
    g10_br1 = reg(t333 ^ rnd61);
    g10_s00 = reg((g10_ar0 * g10_br0) ^ rnd62);
    g10_s01 = reg((g10_ar0 * g10_br1) ^ rnd63);
    g10_s10 = reg((g10_ar1 * g10_br0) ^ rnd64);
    g10_s11 = reg((g10_ar1 * g10_br1) ^ rnd65);
    g10_c0 = ((g10_s00 ^ g10_s01) ^ g10_s10) ^ g10_s11;
    g10_c1 = reg(((rnd62 ^ rnd63) ^ rnd64) ^ rnd65);
    g11_ar0 = (t338 ^ t336) ^ rnd66;
    g11_ar1 = (t339 ^ t337) ^ rnd66;
    g11_br0 = reg((t334 ^ t332) ^ rnd67);
    g11_br1 = reg((t335 ^ t333) ^ rnd67);
    g11_s00 = reg((g11_ar0 * g11_br0) ^ rnd68);
    g11_s01 = reg((g11_ar0 * g11_br1) ^ rnd69);
    g11_s10 = reg((g11_ar1 * g11_br0) ^ rnd70);
    g11_s11 = reg((g11_ar1 * g11_br1) ^ rnd71);
    g11_c0 = ((g11_s00 ^ g11_s01) ^ g11_s10) ^ g11_s11;
    g11_c1 = reg(((rnd68 ^ rnd69) ^ rnd70) ^ rnd71);
    t428 = (t336 ^ t334) ^ (g11_c0 ^ g10_c0);
    t429 = (t337 ^ t335) ^ (g11_c1 ^ g10_c1);
    t430 = (((t338 ^ t332) ^ t334) ^ (g9_c0 ^ g10_c0)) ^ t428;
    t431 = (((t339 ^ t333) ^ t335) ^ (g9_c1 ^ g10_c1)) ^ t429;
    g12_ar0 = t338 ^ rnd72;
    g12_ar1 = t339 ^ rnd72;
    g12_br0 = reg(t428 ^ rnd73);
    g12_br1 = reg(t429 ^ rnd73);
    g12_s00 = reg((g12_ar0 * g12_br0) ^ rnd74);
    g12_s01 = reg((g12_ar0 * g12_br1) ^ rnd75);
    g12_s10 = reg((g12_ar1 * g12_br0) ^ rnd76);
    g12_s11 = reg((g12_ar1 * g12_br1) ^ rnd77);
    g12_c0 = ((g12_s00 ^ g12_s01) ^ g12_s10) ^ g12_s11;
    g12_c1 = reg(((rnd74 ^ rnd75) ^ rnd76) ^ rnd77);
    g13_ar0 = t336 ^ rnd78;
    g13_ar1 = t337 ^ rnd78;
    g13_br0 = reg(t430 ^ rnd79);
    g13_br1 = reg(t431 ^ rnd79);
    g13_s00 = reg((g13_ar0 * g13_br0) ^ rnd80);
    g13_s01 = reg((g13_ar0 * g13_br1) ^ rnd81);
    g13_s10 = reg((g13_ar1 * g13_br0) ^ rnd82);
    g13_s11 = reg((g13_ar1 * g13_br1) ^ rnd83);
    g13_c0 = ((g13_s00 ^ g13_s01) ^ g13_s10) ^ g13_s11;
    g13_c1 = reg(((rnd80 ^ rnd81) ^ rnd82) ^ rnd83);
    g14_ar0 = (t338 ^ t336) ^ rnd84;
    g14_ar1 = (t339 ^ t337) ^ rnd84;
    g14_br0 = reg((t428 ^ t430) ^ rnd85);
    g14_br1 = reg((t429 ^ t431) ^ rnd85);
    g14_s00 = reg((g14_ar0 * g14_br0) ^ rnd86);
    g14_s01 = reg((g14_ar0 * g14_br1) ^ rnd87);
    g14_s10 = reg((g14_ar1 * g14_br0) ^ rnd88);
    g14_s11 = reg((g14_ar1 * g14_br1) ^ rnd89);
    g14_c0 = ((g14_s00 ^ g14_s01) ^ g14_s10) ^ g14_s11;
    g14_c1 = reg(((rnd86 ^ rnd87) ^ rnd88) ^ rnd89);
    t508 = g12_c0 ^ g13_c0;
    t509 = g12_c1 ^ g13_c1;
    t510 = g14_c0 ^ g13_c0;
    t511 = g14_c1 ^ g13_c1;
    t512 = t336 ^ t332;
    t513 = t337 ^ t333;
    t514 = t338 ^ t334;
    t515 = t339 ^ t335;
    g15_ar0 = t514 ^ rnd90;
    g15_ar1 = t515 ^ rnd90;
    g15_br0 = reg(t428 ^ rnd91);
    g15_br1 = reg(t429 ^ rnd91);
    g15_s00 = reg((g15_ar0 * g15_br0) ^ rnd92);
    g15_s01 = reg((g15_ar0 * g15_br1) ^ rnd93);
    g15_s10 = reg((g15_ar1 * g15_br0) ^ rnd94);
    g15_s11 = reg((g15_ar1 * g15_br1) ^ rnd95);
    g15_c0 = ((g15_s00 ^ g15_s01) ^ g15_s10) ^ g15_s11;
    g15_c1 = reg(((rnd92 ^ rnd93) ^ rnd94) ^ rnd95);
    g16_ar0 = t512 ^ rnd96;
    g16_ar1 = t513 ^ rnd96;
    g16_br0 = reg(t430 ^ rnd97);
    g16_br1 = reg(t431 ^ rnd97);
    g16_s00 = reg((g16_ar0 * g16_br0) ^ rnd98);
    g16_s01 = reg((g16_ar0 * g16_br1) ^ rnd99);
    g16_s10 = reg((g16_ar1 * g16_br0) ^ rnd100);
    g16_s11 = reg((g16_ar1 * g16_br1) ^ rnd101);
    g16_c0 = ((g16_s00 ^ g16_s01) ^ g16_s10) ^ g16_s11;
    g16_c1 = reg(((rnd98 ^ rnd99) ^ rnd100) ^ rnd101);
    g17_ar0 = (t514 ^ t512) ^ rnd102;
    g17_ar1 = (t515 ^ t513) ^ rnd102;
    g17_br0 = reg((t428 ^ t430) ^ rnd103);
    g17_br1 = reg((t429 ^ t431) ^ rnd103);
    g17_s00 = reg((g17_ar0 * g17_br0) ^ rnd104);
    g17_s01 = reg((g17_ar0 * g17_br1) ^ rnd105);
    g17_s10 = reg((g17_ar1 * g17_br0) ^ rnd106);
    g17_s11 = reg((g17_ar1 * g17_br1) ^ rnd107);
    g17_c0 = ((g17_s00 ^ g17_s01) ^ g17_s10) ^ g17_s11;
    g17_c1 = reg(((rnd104 ^ rnd105) ^ rnd106) ^ rnd107);
    t592 = g15_c0 ^ g16_c0;
    t593 = g15_c1 ^ g16_c1;
    t594 = g17_c0 ^ g16_c0;
    t595 = g17_c1 ^ g16_c1;
    g18_ar0 = t48 ^ rnd108;
    g18_ar1 = t49 ^ rnd108;
    g18_br0 = reg(t510 ^ rnd109);
    g18_br1 = reg(t511 ^ rnd109);
    g18_s00 = reg((g18_ar0 * g18_br0) ^ rnd110);
    g18_s01 = reg((g18_ar0 * g18_br1) ^ rnd111);
    g18_s10 = reg((g18_ar1 * g18_br0) ^ rnd112);
    g18_s11 = reg((g18_ar1 * g18_br1) ^ rnd113);
    g18_c0 = ((g18_s00 ^ g18_s01) ^ g18_s10) ^ g18_s11;
    g18_c1 = reg(((rnd110 ^ rnd111) ^ rnd112) ^ rnd113);
    g19_ar0 = t46 ^ rnd114;
    g19_ar1 = t47 ^ rnd114;
    g19_br0 = reg(t508 ^ rnd115);
    g19_br1 = reg(t509 ^ rnd115);
    g19_s00 = reg((g19_ar0 * g19_br0) ^ rnd116);
    g19_s01 = reg((g19_ar0 * g19_br1) ^ rnd117);
    g19_s10 = reg((g19_ar1 * g19_br0) ^ rnd118);
    g19_s11 = reg((g19_ar1 * g19_br1) ^ rnd119);
    g19_c0 = ((g19_s00 ^ g19_s01) ^ g19_s10) ^ g19_s11;
    g19_c1 = reg(((rnd116 ^ rnd117) ^ rnd118) ^ rnd119);
    g20_ar0 = (t48 ^ t46) ^ rnd120;
    g20_ar1 = (t49 ^ t47) ^ rnd120;
    g20_br0 = reg((t510 ^ t508) ^ rnd121);
    g20_br1 = reg((t511 ^ t509) ^ rnd121);
    g20_s00 = reg((g20_ar0 * g20_br0) ^ rnd122);
    g20_s01 = reg((g20_ar0 * g20_br1) ^ rnd123);
    g20_s10 = reg((g20_ar1 * g20_br0) ^ rnd124);
    g20_s11 = reg((g20_ar1 * g20_br1) ^ rnd125);
    g20_c0 = ((g20_s00 ^ g20_s01) ^ g20_s10) ^ g20_s11;
    g20_c1 = reg(((rnd122 ^ rnd123) ^ rnd124) ^ rnd125);
    t674 = g20_c0 ^ g19_c0;
    t675 = g20_c1 ^ g19_c1;
    g21_ar0 = t36 ^ rnd126;
    g21_ar1 = t37 ^ rnd126;
    g21_br0 = reg(t594 ^ rnd127);
    g21_br1 = reg(t595 ^ rnd127);
    g21_s00 = reg((g21_ar0 * g21_br0) ^ rnd128);
    g21_s01 = reg((g21_ar0 * g21_br1) ^ rnd129);
    g21_s10 = reg((g21_ar1 * g21_br0) ^ rnd130);
    g21_s11 = reg((g21_ar1 * g21_br1) ^ rnd131);
    g21_c0 = ((g21_s00 ^ g21_s01) ^ g21_s10) ^ g21_s11;
    g21_c1 = reg(((rnd128 ^ rnd129) ^ rnd130) ^ rnd131);
    g22_ar0 = t34 ^ rnd132;
    g22_ar1 = t35 ^ rnd132;
    g22_br0 = reg(t592 ^ rnd133);
    g22_br1 = reg(t593 ^ rnd133);
    g22_s00 = reg((g22_ar0 * g22_br0) ^ rnd134);
    g22_s01 = reg((g22_ar0 * g22_br1) ^ rnd135);
    g22_s10 = reg((g22_ar1 * g22_br0) ^ rnd136);
    g22_s11 = reg((g22_ar1 * g22_br1) ^ rnd137);
    g22_c0 = ((g22_s00 ^ g22_s01) ^ g22_s10) ^ g22_s11;
    g22_c1 = reg(((rnd134 ^ rnd135) ^ rnd136) ^ rnd137);
    g23_ar0 = (t36 ^ t34) ^ rnd138;
    g23_ar1 = (t37 ^ t35) ^ rnd138;
    g23_br0 = reg((t594 ^ t592) ^ rnd139);
    g23_br1 = reg((t595 ^ t593) ^ rnd139);
    g23_s00 = reg((g23_ar0 * g23_br0) ^ rnd140);
    g23_s01 = reg((g23_ar0 * g23_br1) ^ rnd141);
    g23_s10 = reg((g23_ar1 * g23_br0) ^ rnd142);
    g23_s11 = reg((g23_ar1 * g23_br1) ^ rnd143);
    g23_c0 = ((g23_s00 ^ g23_s01) ^ g23_s10) ^ g23_s11;
    g23_c1 = reg(((rnd140 ^ rnd141) ^ rnd142) ^ rnd143);
    t752 = g21_c0 ^ g22_c0;
    t753 = g21_c1 ^ g22_c1;
    t754 = g23_c0 ^ g22_c0;
    t755 = g23_c1 ^ g22_c1;
    t756 = t46 ^ t34;
    t757 = t47 ^ t35;
    t758 = t48 ^ t36;
    t759 = t49 ^ t37;
    t760 = t508 ^ t592;
    t761 = t509 ^ t593;
    t762 = t510 ^ t594;
    t763 = t511 ^ t595;
    g24_ar0 = t758 ^ rnd144;
    g24_ar1 = t759 ^ rnd144;
    g24_br0 = reg(t762 ^ rnd145);
    g24_br1 = reg(t763 ^ rnd145);
    g24_s00 = reg((g24_ar0 * g24_br0) ^ rnd146);
    g24_s01 = reg((g24_ar0 * g24_br1) ^ rnd147);
    g24_s10 = reg((g24_ar1 * g24_br0) ^ rnd148);
    g24_s11 = reg((g24_ar1 * g24_br1) ^ rnd149);
    g24_c0 = ((g24_s00 ^ g24_s01) ^ g24_s10) ^ g24_s11;
    g24_c1 = reg(((rnd146 ^ rnd147) ^ rnd148) ^ rnd149);
    g25_ar0 = t756 ^ rnd150;
    g25_ar1 = t757 ^ rnd150;
    g25_br0 = reg(t760 ^ rnd151);
    g25_br1 = reg(t761 ^ rnd151);
    g25_s00 = reg((g25_ar0 * g25_br0) ^ rnd152);
    g25_s01 = reg((g25_ar0 * g25_br1) ^ rnd153);
    g25_s10 = reg((g25_ar1 * g25_br0) ^ rnd154);
    g25_s11 = reg((g25_ar1 * g25_br1) ^ rnd155);
    g25_c0 = ((g25_s00 ^ g25_s01) ^ g25_s10) ^ g25_s11;
    g25_c1 = reg(((rnd152 ^ rnd153) ^ rnd154) ^ rnd155);
    g26_ar0 = (t758 ^ t756) ^ rnd156;
    g26_ar1 = (t759 ^ t757) ^ rnd156;
    g26_br0 = reg((t762 ^ t760) ^ rnd157);
    g26_br1 = reg((t763 ^ t761) ^ rnd157);
    g26_s00 = reg((g26_ar0 * g26_br0) ^ rnd158);
    g26_s01 = reg((g26_ar0 * g26_br1) ^ rnd159);
    g26_s10 = reg((g26_ar1 * g26_br0) ^ rnd160);
    g26_s11 = reg((g26_ar1 * g26_br1) ^ rnd161);
    g26_c0 = ((g26_s00 ^ g26_s01) ^ g26_s10) ^ g26_s11;
    g26_c1 = reg(((rnd158 ^ rnd159) ^ rnd160) ^ rnd161);
    t846 = t674 ^ t752;
    t847 = t675 ^ t753;
    t848 = ((g18_c0 ^ g19_c0) ^ t674) ^ t754;
    t849 = ((g18_c1 ^ g19_c1) ^ t675) ^ t755;
    t850 = (g24_c0 ^ g25_c0) ^ t752;
    t851 = (g24_c1 ^ g25_c1) ^ t753;
    t852 = (g26_c0 ^ g25_c0) ^ t754;
    t853 = (g26_c1 ^ g25_c1) ^ t755;
    t854 = t34 ^ t16;
    t855 = t35 ^ t17;
    t856 = t36 ^ t20;
    t857 = t37 ^ t21;
    t858 = t46 ^ t26;
    t859 = t47 ^ t27;
    t860 = t48 ^ t30;
    t861 = t49 ^ t31;
    g27_ar0 = t860 ^ rnd162;
    g27_ar1 = t861 ^ rnd162;
    g27_br0 = reg(t510 ^ rnd163);
    g27_br1 = reg(t511 ^ rnd163);
    g27_s00 = reg((g27_ar0 * g27_br0) ^ rnd164);
    g27_s01 = reg((g27_ar0 * g27_br1) ^ rnd165);
    g27_s10 = reg((g27_ar1 * g27_br0) ^ rnd166);
    g27_s11 = reg((g27_ar1 * g27_br1) ^ rnd167);
    g27_c0 = ((g27_s00 ^ g27_s01) ^ g27_s10) ^ g27_s11;
    g27_c1 = reg(((rnd164 ^ rnd165) ^ rnd166) ^ rnd167);
    g28_ar0 = t858 ^ rnd168;
    g28_ar1 = t859 ^ rnd168;
    g28_br0 = reg(t508 ^ rnd169);
    g28_br1 = reg(t509 ^ rnd169);
    g28_s00 = reg((g28_ar0 * g28_br0) ^ rnd170);
    g28_s01 = reg((g28_ar0 * g28_br1) ^ rnd171);
    g28_s10 = reg((g28_ar1 * g28_br0) ^ rnd172);
    g28_s11 = reg((g28_ar1 * g28_br1) ^ rnd173);
    g28_c0 = ((g28_s00 ^ g28_s01) ^ g28_s10) ^ g28_s11;
    g28_c1 = reg(((rnd170 ^ rnd171) ^ rnd172) ^ rnd173);
    g29_ar0 = (t860 ^ t858) ^ rnd174;
    g29_ar1 = (t861 ^ t859) ^ rnd174;
    g29_br0 = reg((t510 ^ t508) ^ rnd175);
    g29_br1 = reg((t511 ^ t509) ^ rnd175);
    g29_s00 = reg((g29_ar0 * g29_br0) ^ rnd176);
    g29_s01 = reg((g29_ar0 * g29_br1) ^ rnd177);
    g29_s10 = reg((g29_ar1 * g29_br0) ^ rnd178);
    g29_s11 = reg((g29_ar1 * g29_br1) ^ rnd179);
    g29_c0 = ((g29_s00 ^ g29_s01) ^ g29_s10) ^ g29_s11;
    g29_c1 = reg(((rnd176 ^ rnd177) ^ rnd178) ^ rnd179);
    t940 = g29_c0 ^ g28_c0;
    t941 = g29_c1 ^ g28_c1;
    g30_ar0 = t856 ^ rnd180;
    g30_ar1 = t857 ^ rnd180;
    g30_br0 = reg(t594 ^ rnd181);
    g30_br1 = reg(t595 ^ rnd181);
    g30_s00 = reg((g30_ar0 * g30_br0) ^ rnd182);
    g30_s01 = reg((g30_ar0 * g30_br1) ^ rnd183);
    g30_s10 = reg((g30_ar1 * g30_br0) ^ rnd184);
    g30_s11 = reg((g30_ar1 * g30_br1) ^ rnd185);
    g30_c0 = ((g30_s00 ^ g30_s01) ^ g30_s10) ^ g30_s11;
    g30_c1 = reg(((rnd182 ^ rnd183) ^ rnd184) ^ rnd185);
    g31_ar0 = t854 ^ rnd186;
    g31_ar1 = t855 ^ rnd186;
    g31_br0 = reg(t592 ^ rnd187);
    g31_br1 = reg(t593 ^ rnd187);
    g31_s00 = reg((g31_ar0 * g31_br0) ^ rnd188);
    g31_s01 = reg((g31_ar0 * g31_br1) ^ rnd189);
    g31_s10 = reg((g31_ar1 * g31_br0) ^ rnd190);
    g31_s11 = reg((g31_ar1 * g31_br1) ^ rnd191);
    g31_c0 = ((g31_s00 ^ g31_s01) ^ g31_s10) ^ g31_s11;
    g31_c1 = reg(((rnd188 ^ rnd189) ^ rnd190) ^ rnd191);
    g32_ar0 = (t856 ^ t854) ^ rnd192;
    g32_ar1 = (t857 ^ t855) ^ rnd192;
    g32_br0 = reg((t594 ^ t592) ^ rnd193);
    g32_br1 = reg((t595 ^ t593) ^ rnd193);
    g32_s00 = reg((g32_ar0 * g32_br0) ^ rnd194);
    g32_s01 = reg((g32_ar0 * g32_br1) ^ rnd195);
    g32_s10 = reg((g32_ar1 * g32_br0) ^ rnd196);
    g32_s11 = reg((g32_ar1 * g32_br1) ^ rnd197);
    g32_c0 = ((g32_s00 ^ g32_s01) ^ g32_s10) ^ g32_s11;
    g32_c1 = reg(((rnd194 ^ rnd195) ^ rnd196) ^ rnd197);
    t1018 = g30_c0 ^ g31_c0;
    t1019 = g30_c1 ^ g31_c1;
    t1020 = g32_c0 ^ g31_c0;
    t1021 = g32_c1 ^ g31_c1;
    t1022 = t858 ^ t854;
    t1023 = t859 ^ t855;
    t1024 = t860 ^ t856;
    t1025 = t861 ^ t857;
    t1026 = t508 ^ t592;
    t1027 = t509 ^ t593;
    t1028 = t510 ^ t594;
    t1029 = t511 ^ t595;
    g33_ar0 = t1024 ^ rnd198;
    g33_ar1 = t1025 ^ rnd198;
    g33_br0 = reg(t1028 ^ rnd199);
    g33_br1 = reg(t1029 ^ rnd199);
    g33_s00 = reg((g33_ar0 * g33_br0) ^ rnd200);
    g33_s01 = reg((g33_ar0 * g33_br1) ^ rnd201);
    g33_s10 = reg((g33_ar1 * g33_br0) ^ rnd202);
    g33_s11 = reg((g33_ar1 * g33_br1) ^ rnd203);
    g33_c0 = ((g33_s00 ^ g33_s01) ^ g33_s10) ^ g33_s11;
    g33_c1 = reg(((rnd200 ^ rnd201) ^ rnd202) ^ rnd203);
    g34_ar0 = t1022 ^ rnd204;
    g34_ar1 = t1023 ^ rnd204;
    g34_br0 = reg(t1026 ^ rnd205);
    g34_br1 = reg(t1027 ^ rnd205);
    g34_s00 = reg((g34_ar0 * g34_br0) ^ rnd206);
    g34_s01 = reg((g34_ar0 * g34_br1) ^ rnd207);
    g34_s10 = reg((g34_ar1 * g34_br0) ^ rnd208);
    g34_s11 = reg((g34_ar1 * g34_br1) ^ rnd209);
    g34_c0 = ((g34_s00 ^ g34_s01) ^ g34_s10) ^ g34_s11;
    g34_c1 = reg(((rnd206 ^ rnd207) ^ rnd208) ^ rnd209);
    g35_ar0 = (t1024 ^ t1022) ^ rnd210;
    g35_ar1 = (t1025 ^ t1023) ^ rnd210;
    g35_br0 = reg((t1028 ^ t1026) ^ rnd211);
    g35_br1 = reg((t1029 ^ t1027) ^ rnd211);
    g35_s00 = reg((g35_ar0 * g35_br0) ^ rnd212);
    g35_s01 = reg((g35_ar0 * g35_br1) ^ rnd213);
    g35_s10 = reg((g35_ar1 * g35_br0) ^ rnd214);
    g35_s11 = reg((g35_ar1 * g35_br1) ^ rnd215);
    g35_c0 = ((g35_s00 ^ g35_s01) ^ g35_s10) ^ g35_s11;
    g35_c1 = reg(((rnd212 ^ rnd213) ^ rnd214) ^ rnd215);
    t1112 = t940 ^ t1018;
    t1113 = t941 ^ t1019;
    t1114 = ((g27_c0 ^ g28_c0) ^ t940) ^ t1020;
    t1115 = ((g27_c1 ^ g28_c1) ^ t941) ^ t1021;
    t1116 = (g33_c0 ^ g34_c0) ^ t1018;
    t1117 = (g33_c1 ^ g34_c1) ^ t1019;
    t1118 = (g35_c0 ^ g34_c0) ^ t1020;
    t1119 = (g35_c1 ^ g34_c1) ^ t1021;
    *y0_1 = (((t1113 ^ t1115) ^ t1119) ^ t847) ^ t851;
    *y1_1 = ((t1113 ^ t1117) ^ t847) ^ t849;
    *y2_0 = ((t1112 ^ t1118) ^ t848) ^ t852;
    *y2_1 = ((t1113 ^ t1119) ^ t849) ^ t853;
    *y3_0 = (((t1112 ^ t1114) ^ t1118) ^ t846) ^ t852;
    *y3_1 = (((t1113 ^ t1115) ^ t1119) ^ t847) ^ t853;
    *y4_0 = (((((t1112 ^ t1114) ^ t1116) ^ t1118) ^ t846) ^ t848) ^ t852;
    *y4_1 = (((((t1113 ^ t1115) ^ t1117) ^ t1119) ^ t847) ^ t849) ^ t853;
    *y5_1 = ((t1117 ^ t847) ^ t849) ^ t851;
    *y6_1 = t847 ^ t849;
    *y7_0 = (t1116 ^ t1118) ^ t848;
    *y7_1 = (t1117 ^ t1119) ^ t849;
    *y0_0 = ~((((t1112 ^ t1114) ^ t1118) ^ t846) ^ t850);
    *y1_0 = ~(((t1112 ^ t1116) ^ t846) ^ t848);
    *y5_0 = ~(((t1116 ^ t846) ^ t848) ^ t850);
    *y6_0 = ~(t846 ^ t848);
    return 0;
}
