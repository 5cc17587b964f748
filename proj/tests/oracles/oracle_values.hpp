// Generated by tests/oracles/generate_oracles.py (mpmath 1.3.0, 40 digits). Do not edit.
#pragma once

#include <complex>

namespace oracle {

// ln Gamma(1 + i), principal branch
inline const std::complex<double> kLogGamma_1_plus_i{-6.5092319930185633889e-1, -3.0164032046753319789e-1};
// ln Gamma(-3.5 + 0.2i)
inline const std::complex<double> kLogGamma_m3p5_0p2i{-1.4896603675052907745, -1.2288514412727094922e+1};
// ln Gamma(10 + 20i)
inline const std::complex<double> kLogGamma_10_20i{-1.7029804439565110603, 5.2660660425584719482e+1};
// Gamma(0.3 - 4i)
inline const std::complex<double> kGamma_0p3_m4i{1.164643684811490564e-3, -3.3525598880352024374e-3};
// 2F1(-2, i; -2 + i; -i)
inline const std::complex<double> kTerminating2F1{2.2, 6.0e-1};
// 2F1(1, 1; 2 - 0.7i; (1+i)/2)
inline const std::complex<double> kHyp_1_1_2m0p7i_half1pi{9.7956921062779312922e-1, 3.7747110887961646155e-1};
// 2F1(0.5+0.3i, 1.25; 2.1-0.4i; e^{i pi/3})
inline const std::complex<double> kHyp_unitcircle{7.9321782098684152281e-1, 2.2498652891004681281e-1};
// 2F1(0.3, 0.7+0.2i; 1.9; 0.95+0.1i)
inline const std::complex<double> kHyp_near_one{1.1567744841012840436, 1.1638201684432118168e-1};
// 2F1(0.4-0.5i, 1.5; 2.25+0.5i; -3+0.5i)
inline const std::complex<double> kHyp_outside{6.2207060900005491728e-1, 4.2023832527353195866e-1};
// 2F1(0.25, 0.6+0.1i; 1.3-0.2i; 2+i)
inline const std::complex<double> kHyp_above_cut{9.2833548768712093614e-1, 2.543043664049436417e-1};
// 2F1(11, 11; 12 - 0.7i; (1+i)/2)
inline const std::complex<double> kHyp_large_params{-4.2430364291127292959, 1.975945016495357802e+1};
// 1F1(0.5i, 1; -0-2i)
inline const std::complex<double> kKummer_m2i{2.0044916162067502892, -5.8353084750703744486e-1};
// 1F1(0.5i, 1; -0-40i)
inline const std::complex<double> kKummer_m40i{-1.3326500181707711137, -2.3088031916330770656};
// 1F1(0.5i, 1; -0-100i)
inline const std::complex<double> kKummer_m100i{-2.1814856429202567666, -1.4941813821231553319};
// 1F1(0.5i, 1; 3.5-7i)
inline const std::complex<double> kKummer_3p5_m7i{-4.1001080733555381056, -4.0514862859665740797};
// b=1, k=2, C=1: zeta
inline const std::complex<double> kC1_zeta{5.8823529411764705882e-2, -9.9826839696924356386e-1};
// b=1, k=2, C=1: lambda
inline const std::complex<double> kC1_lambda{0.0, -2.928932188134524756e-1};
// b=1, k=2, C=1: gamma
inline const std::complex<double> kC1_gamma{1.4142135623730950488, 0.0};
// b=1, k=2, C=1: theta
inline const std::complex<double> kC1_theta{8.4198285288145649355e-1, -5.3950428677963587661e-1};
// b=1, k=2, C=1: chi
inline const std::complex<double> kC1_chi{-8.8235294117647058824e-1, -4.7058823529411764706e-1};
// b=1, k=2, C=1: tau(t = 0.5)
inline const std::complex<double> kC1_tau_t0p5{7.071067811865475244e-1, 2.071067811865475244e-1};
// a_2 at b=1, k=2, t=0.5, C=1
inline const std::complex<double> kC1_a2{1.0, -4.0};
// b_2 at b=1, k=2, t=0.5, C=1
inline const std::complex<double> kC1_b2{9.5, 2.0};
// d_2 at b=1, k=2, t=0.5, C=1
inline const std::complex<double> kC1_d2{1.0, 4.0};
// p_5(0.7; -i)
inline const std::complex<double> kP5_t0p7{4.8715233333333333333e-1, 2.3328643333333333333};
// p_20(0.7; -i)
inline const std::complex<double> kP20_t0p7{-2.1412264696917819438, -1.2499473365233289615};
// q_0(0.7; -i)
inline const std::complex<double> kQ0_t0p7{1.1672151741845974416e-1, -5.9681509756078296814e-1};
// q_1(0.7; -i)
inline const std::complex<double> kQ1_t0p7{2.1934398868116651262e-1, 9.6290728046252866744e-2};
// q_2(0.7; -i)
inline const std::complex<double> kQ2_t0p7{-7.9553954778498244703e-2, 1.148106662257800377e-1};
// q_30(0.7; -i)
inline const std::complex<double> kQ30_t0p7{-8.0406926700456018636e-3, -5.2801932899637080989e-3};
// q_60(0.7; -i)
inline const std::complex<double> kQ60_t0p7{2.3626138748202937249e-3, 4.1724087241109621751e-3};
// q_1(0.5; -i) through the 1/zeta connection
inline const std::complex<double> kQ1_t0p5{2.8568568910180273659e-1, 5.2755708209204999564e-2};
// g^xi_00 at b=1, k=1, t=0.7, C=0
inline const std::complex<double> kG00_C0{3.5676830748962135615e-1, -2.4004679007116161199e-1};
// g^xi_21 at b=1, k=2, t=0.5, C=1
inline const std::complex<double> kG21_C1{9.3060285635865753822e-2, 4.0881601348349835828e-2};
// <phi_0, u> at b=1, k=1, t=0.7, C=0
inline const std::complex<double> kProjection0_C0{2.3788835486310107993, -5.8871604640648286303e-1};
// <phi_3, u> at b=1, k=1, t=0.7, C=0
inline const std::complex<double> kProjection3_C0{-4.4556944418805855655e-1, 6.9964708301670441791};
// <phi_2, u> at b=1, k=2, t=0.5, C=1
inline const std::complex<double> kProjection2_C1{-5.0638279928833541437, -5.7843879829710674501};
// G_{00,00} at b=1, k=1, t0=0.7, C=0
inline const std::complex<double> kG2d_0000_C0{4.1829493780707817909e-1, 8.2229431707451922305e-2};
// G_{00,00} at b=1, k=2, t0=0.5, C=1
inline const std::complex<double> kG2d_0000_C1{2.8537962181489970109e-1, 5.1252495889348138446e-2};

}  // namespace oracle
