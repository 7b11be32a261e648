#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vacpol/errors.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::specialfns {

double harmonic(int ell) {
    if (ell < 0) throw ParameterError("harmonic: negative index " + std::to_string(ell));
    double h = 0.0;
    // small terms first
    for (int j = ell; j >= 1; --j) h += 1.0 / j;
    return h;
}

double rgamma(double x) {
    if (!std::isfinite(x)) throw ParameterError("rgamma: non-finite argument");
    if (x > 0.0) return 1.0 / std::tgamma(x);
    const double n = std::nearbyint(x);
    if (x == n) return 0.0;
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, with the sine reduced around n
    const double r = x - n;
    const double s = std::sin(std::numbers::pi * r) * (std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0);
    return s * std::tgamma(1.0 - x) / std::numbers::pi;
}

double erf(double z) { return std::erf(z); }

double erfc(double z) { return std::erfc(z); }

double erfcx(double z) {
    if (std::isnan(z)) return z;
    if (z < 0.0) {
        if (z < -26.7) return std::numeric_limits<double>::infinity();
        return 2.0 * std::exp(z * z) - erfcx(-z);
    }
    if (z < 2.0) return std::exp(z * z) * std::erfc(z);
    if (std::isinf(z)) return 0.0;
    // Laplace continued fraction  sqrt(pi) erfcx(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    constexpr double tiny = 1e-300;
    double f = z;
    double c = z;
    double d = 0.0;
    for (int n = 1; n < 5000; ++n) {
        const double an = 0.5 * n;
        d = z + an * d;
        if (std::abs(d) < tiny) d = tiny;
        c = z + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = c * d;
        f *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return 1.0 / (f * std::sqrt(std::numbers::pi));
}

}  // namespace vacpol::specialfns
