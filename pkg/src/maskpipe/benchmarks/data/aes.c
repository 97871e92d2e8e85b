int aes_sbox(bool x0, bool x1, bool x2, bool x3, bool x4, bool x5, bool x6, bool x7, bool *y0, bool *y1, bool *y2, bool *y3, bool *y4, bool *y5, bool *y6, bool *y7)
{
    t8 = x0 ^ x1;
    t10 = (x2 ^ x4) ^ x5;
    t13 = ((x2 ^ x3) ^ x4) ^ x7;
    t15 = (x3 ^ x5) ^ x6;
    t17 = (x4 ^ x5) ^ x6;
    t18 = x2 ^ x3;
    t23 = ((((x1 ^ x2) ^ x3) ^ x4) ^ x6) ^ x7;
    t24 = x5 ^ x7;
    t26 = t23 * t13;
    t31 = ((t24 ^ t23) * (t15 ^ t13)) ^ t26;
    t33 = t17 * t8;
    t37 = (t18 * t10) ^ t33;
    t38 = ((t18 ^ t17) * (t10 ^ t8)) ^ t33;
    t39 = t23 ^ t17;
    t40 = t24 ^ t18;
    t41 = t13 ^ t8;
    t42 = t15 ^ t10;
    t44 = t39 * t41;
    t67 = (((t23 ^ t8) ^ t10) ^ t15) ^ (t31 ^ t37);
    t68 = (((t23 ^ t24) ^ t10) ^ t13) ^ ((((t24 * t15) ^ t26) ^ t31) ^ t38);
    t69 = ((((t18 ^ t23) ^ t24) ^ t13) ^ t15) ^ (((t40 * t42) ^ t44) ^ t37);
    t70 = ((t17 ^ t24) ^ t15) ^ ((((t40 ^ t39) * (t42 ^ t41)) ^ t44) ^ t38);
    t72 = t69 * t67;
    t82 = (t69 ^ t68) ^ (((t70 ^ t69) * (t68 ^ t67)) ^ t72);
    t83 = (((t70 ^ t67) ^ t68) ^ ((t70 * t68) ^ t72)) ^ t82;
    t85 = t69 * t83;
    t89 = (t70 * t82) ^ t85;
    t90 = ((t70 ^ t69) * (t82 ^ t83)) ^ t85;
    t91 = t69 ^ t67;
    t92 = t70 ^ t68;
    t94 = t91 * t83;
    t98 = (t92 * t82) ^ t94;
    t99 = ((t92 ^ t91) * (t82 ^ t83)) ^ t94;
    t101 = t23 * t89;
    t106 = ((t24 ^ t23) * (t90 ^ t89)) ^ t101;
    t108 = t17 * t98;
    t112 = (t18 * t99) ^ t108;
    t113 = ((t18 ^ t17) * (t99 ^ t98)) ^ t108;
    t114 = t23 ^ t17;
    t115 = t24 ^ t18;
    t116 = t89 ^ t98;
    t117 = t90 ^ t99;
    t119 = t114 * t116;
    t126 = t106 ^ t112;
    t127 = (((t24 * t90) ^ t101) ^ t106) ^ t113;
    t128 = ((t115 * t117) ^ t119) ^ t112;
    t129 = (((t115 ^ t114) * (t117 ^ t116)) ^ t119) ^ t113;
    t130 = t17 ^ t8;
    t131 = t18 ^ t10;
    t132 = t23 ^ t13;
    t133 = t24 ^ t15;
    t135 = t132 * t89;
    t140 = ((t133 ^ t132) * (t90 ^ t89)) ^ t135;
    t142 = t130 * t98;
    t146 = (t131 * t99) ^ t142;
    t147 = ((t131 ^ t130) * (t99 ^ t98)) ^ t142;
    t148 = t132 ^ t130;
    t149 = t133 ^ t131;
    t150 = t89 ^ t98;
    t151 = t90 ^ t99;
    t153 = t148 * t150;
    t160 = t140 ^ t146;
    t161 = (((t133 * t90) ^ t135) ^ t140) ^ t147;
    t162 = ((t149 * t151) ^ t153) ^ t146;
    t163 = (((t149 ^ t148) * (t151 ^ t150)) ^ t153) ^ t147;
    *y2 = ((t160 ^ t163) ^ t127) ^ t129;
    *y3 = (((t160 ^ t161) ^ t163) ^ t126) ^ t129;
    *y4 = (((((t160 ^ t161) ^ t162) ^ t163) ^ t126) ^ t127) ^ t129;
    *y7 = (t162 ^ t163) ^ t127;
    *y0 = ~((((t160 ^ t161) ^ t163) ^ t126) ^ t128);
    *y1 = ~(((t160 ^ t162) ^ t126) ^ t127);
    *y5 = ~(((t162 ^ t126) ^ t127) ^ t128);
    *y6 = ~(t126 ^ t127);
    return 0;
}
