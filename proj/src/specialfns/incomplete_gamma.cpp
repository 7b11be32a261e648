#include <cmath>
#include <limits>
#include <string>

#include "reciprocal_gamma.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::specialfns {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

// Legendre continued fraction (modified Lentz). Returns e^z z^{-a} Gamma(a, z).
double scaled_continued_fraction(double a, double z) {
    double b = z + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw NumericalFailure("upper_inc_gamma: continued fraction did not converge", h, std::abs(h));
}

// Gamma(a, z) for |a| <= 1/2 and moderate z, smooth through a = 0:
//   (Gamma(1+a) - 1)/a - (z^a - 1)/a - sum_{n>=1} (-1)^n z^{a+n} / (n! (a+n))
double small_order_series(double a, double z) {
    const double lz = std::log(z);
    const double t = a * lz;
    const double za_minus_one_over_a = std::abs(t) < 1e-300 ? lz : std::expm1(t) / a;
    const double za = std::exp(t);
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= kMaxIter; ++n) {
        term *= -z / n;
        const double del = term / (a + n);
        sum += del;
        if (std::abs(del) < kEps * std::abs(sum)) break;
    }
    return detail::gamma_1p_minus_one_over_x(a) - za_minus_one_over_a - za * sum;
}

// Gamma(a) - gamma(a, z) with the lower function from its power series, a > 0.
double complement_of_lower(double a, double z) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 1; n <= kMaxIter; ++n) {
        ap += 1.0;
        del *= z / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    const double lower = sum * std::exp(-z + a * std::log(z));
    return std::tgamma(a) - lower;
}

double scaled_impl(double a, double z) {
    if (z >= 1.0 && z >= a + 1.0) return scaled_continued_fraction(a, z);
    const double rescale = std::exp(z - a * std::log(z));
    if (a >= 0.5) return complement_of_lower(a, z) * rescale;
    if (a >= -0.5) return small_order_series(a, z) * rescale;

    // downward recurrence G_a = (z G_{a+1} - 1)/a from the reduced order
    const int steps = static_cast<int>(std::ceil(-0.5 - a));
    const double a0 = a + steps;
    double g = small_order_series(a0, z) * std::exp(z - a0 * std::log(z));
    for (int k = 1; k <= steps; ++k) {
        const double ak = a0 - k;
        g = (z * g - 1.0) / ak;
    }
    return g;
}

void check(double a, double z, const char* who) {
    if (!std::isfinite(a) || !std::isfinite(z) || z < 0.0)
        throw ParameterError(std::string(who) + ": need finite a and z > 0, got z = " +
                             std::to_string(z));
}

}  // namespace

double upper_inc_gamma_scaled(double a, double z) {
    check(a, z, "upper_inc_gamma_scaled");
    if (z == 0.0) {
        if (a < 0.0) return -1.0 / a;
        throw ParameterError("upper_inc_gamma_scaled: z = 0 only allowed for a < 0");
    }
    return scaled_impl(a, z);
}

double upper_inc_gamma(double a, double z) {
    check(a, z, "upper_inc_gamma");
    if (z == 0.0) throw ParameterError("upper_inc_gamma: z must be positive");
    return scaled_impl(a, z) * std::exp(a * std::log(z) - z);
}

double expint_e1(double z) { return upper_inc_gamma(0.0, z); }

}  // namespace vacpol::specialfns
