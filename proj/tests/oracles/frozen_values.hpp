#pragma once

// Generated by tests/oracles/derive_values.py; do not edit.

namespace gentrig::oracle {

inline constexpr double kLogGamma7p3 = 7.1478925230222490328;
inline constexpr double kLogGamma0p1 = 2.2527126517342059599;
inline constexpr double kBetaQuarterQuarter = 7.4162987092054876737;
inline constexpr double kHyp2f1Third = 0.92741206705707158076;
inline constexpr double kHyp2f1Near1 = 2.6552608197994803359;
inline constexpr double kHyp2f1Far = 0.57878151429213947938;
inline constexpr double kHyp2f1Mid = 1.4414196632966538649;
inline constexpr double kIncBeta = 0.93881313171792062567;
inline constexpr double kHyp3f2Inside = 1.0558280983774431445;
inline constexpr double kHyp3f2Unit = 1.0802898072172850415;
inline constexpr double kHyp3f2MinusOne = 0.95723708320764725099;
inline constexpr double kHyp3f2SlowUnit = 2.1075491908922128798;
inline constexpr double kHalfPi_1p5_3 = 1.7666387502854475038;
inline constexpr double kHalfHat_2_4 = 1.8540746773013719184;
inline constexpr double kArcsin_3_1p5_0p5 = 0.52795324901808545171;
inline constexpr double kArccos_2p5_1p8_0p6 = 0.96881179211246988252;
inline constexpr double kArcsinh_2_4_3p7 = 1.5839482960800570387;
inline constexpr double kArccosh_1p7_2p2_1p9 = 1.0863398321003346408;
inline constexpr double kArccosh_3_2_50 = 18.972683864320833263;
inline constexpr double kArctam_1p5_2p5_0p8 = 0.72453533303864214461;
inline constexpr double kArctam_4_1p5_2 = 0.90941885025100280026;
inline constexpr double kArctamh_3_1p5_0p7 = 1.1025013568477235643;
inline constexpr double kArctamh_4_1p5_0p9 = 2.5227351269680774819;
inline constexpr double kSin_1p5_3_0p9 = 0.80406894195233413912;
inline constexpr double kCos_2p5_1p5_0p7 = 0.75582902832445503629;
inline constexpr double kSinh_2_4_1p5 = 2.8198251387281347875;
inline constexpr double kCosh_1p7_2p2_0p88 = 1.5167582070615247797;
inline constexpr double kTam_1p5_2p5_0p6 = 0.63742363963801143156;
inline constexpr double kTamh_1p5_2p5_0p6 = 0.56704523767595897212;
inline constexpr double kDTam_1p5_2p5_0p6 = 1.2287933504737061825;
inline constexpr double kDCosh_1p7_2p2_0p88 = 1.4904492067251194999;
inline constexpr double kDpSin_2_3_0p7 = 0.012867295402404768217;
inline constexpr double kDqSin_2_3_0p7 = 0.017667244612114778724;
inline constexpr double kDpSinh_1p5_2p5_0p8 = -0.084293756839009834541;
inline constexpr double kDpCosh_1p7_2p2_0p88 = -0.474632884556098542;
inline constexpr double kDqCosh_1p7_2p2_0p88 = -0.050067060058352960366;
inline constexpr double kDpCos_2p5_1p5_0p7 = 0.068598042477975247651;
inline constexpr double kDqCos_2p5_1p5_0p7 = 0.10143055498207689723;
inline constexpr double kDqSinhAtX_5_3 = -0.0063279818340359795511;
inline constexpr double kDqSinhAtX_5_5 = 0.00039020226914335271448;
inline constexpr double kCosh_1p7_1p5_0p88 = 1.5462138465295408593;
inline constexpr double kCosh_1p7_2_0p88 = 1.5264199124372671054;
inline constexpr double kCosh_1p7_2p5_0p88 = 1.5011267768426344311;
inline constexpr double kCosh_1p7_3_0p88 = 1.4733496719066099338;
inline constexpr double kCosh_1p7_1p5_0p99 = 1.6662285619144572204;
inline constexpr double kCosh_1p7_2_0p99 = 1.6924829781822624716;
inline constexpr double kCosh_1p7_2p5_0p99 = 1.7117351771338239403;
inline constexpr double kCosh_1p7_3_0p99 = 1.7259882429580517313;
inline constexpr double kIntArcsin_2_3 = 0.68958831430528237977;
inline constexpr double kIntArcsinUnit_1p5_2p5 = 1.3748986780948934548;
inline constexpr double kIntArccos_3_2 = 1.8202847163729201609;
inline constexpr double kIntArcsinh_2_3 = 1.282469923228970885;
inline constexpr double kIntArcsinh_3_2 = 0.82079542805048531308;
inline constexpr double kIntArccosh_2_3 = 3.0792604356153625574;
inline constexpr double kCorSinh_2_4_x = 0.74162987092054876737;
inline constexpr double kCorSinh_2_4 = 2.3118566892280726515;

}  // namespace gentrig::oracle
