#pragma once

#include <array>

namespace vacpol::specialfns::detail {

// Taylor coefficients of 1/Gamma(1+x) about x = 0, from a 50-digit evaluation.
// Truncating after x^26 leaves an error below 1e-19 for |x| <= 1/2.
inline constexpr std::array<double, 27> kRecipGammaTaylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -0.0000012504934821426706573,
    0.0000011330272319816958824,
    -0.00000020563384169776071035,
    0.0000000061160951044814158179,
    0.0000000050020076444692229301,
    -0.0000000011812745704870201446,
    0.00000000010434267116911005105,
    0.000000000007782263439905071254,
    -0.0000000000036968056186422057082,
    0.0000000000005100370287454475979,
    -0.000000000000020583260535665067832,
    -0.0000000000000053481225394230179824,
    0.0000000000000012267786282382607902,
    -0.00000000000000011812593016974587695,
    0.0000000000000000011866922547516003326,
};

/// 1/Gamma(1+x) for |x| <= 1/2.
inline double recip_gamma_1p(double x) {
    double acc = 0.0;
    for (auto it = kRecipGammaTaylor.rbegin(); it != kRecipGammaTaylor.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

/// (1/Gamma(1-x) - 1/Gamma(1+x)) / (2x), smooth through x = 0.
inline double temme_gamma1(double x) {
    // odd part of the series, divided by x
    double acc = 0.0;
    const double x2 = x * x;
    for (int k = static_cast<int>(kRecipGammaTaylor.size()) - 1; k >= 1; --k)
        if (k % 2 == 1) acc = acc * x2 + kRecipGammaTaylor[k];
    return -acc;
}

/// (1/Gamma(1-x) + 1/Gamma(1+x)) / 2.
inline double temme_gamma2(double x) {
    double acc = 0.0;
    const double x2 = x * x;
    for (int k = static_cast<int>(kRecipGammaTaylor.size()) - 1; k >= 0; --k)
        if (k % 2 == 0) acc = acc * x2 + kRecipGammaTaylor[k];
    return acc;
}

/// (Gamma(1+x) - 1) / x for |x| <= 1/2, smooth through x = 0 (value -gamma_EM).
inline double gamma_1p_minus_one_over_x(double x) {
    // 1/Gamma(1+x) = 1 + x*s(x)  =>  (Gamma(1+x) - 1)/x = -s / (1 + x*s)
    double s = 0.0;
    for (int k = static_cast<int>(kRecipGammaTaylor.size()) - 1; k >= 1; --k)
        s = s * x + kRecipGammaTaylor[k];
    return -s / (1.0 + x * s);
}

}  // namespace vacpol::specialfns::detail
