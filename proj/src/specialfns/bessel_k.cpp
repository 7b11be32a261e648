#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "reciprocal_gamma.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::specialfns {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 10000;
constexpr double kMaxOrder = 50.0;

// e^w * (w^mu K_mu(w), w^{mu+1} K_{mu+1}(w)) for |mu| <= 1/2.
struct FrakPair {
    double lower;
    double upper;
};

// Temme's series, w <= 2.
FrakPair temme_series_scaled(double mu, double w) {
    const double half_w = 0.5 * w;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(half_w);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const double gam1 = detail::temme_gamma1(mu);
    const double gam2 = detail::temme_gamma2(mu);
    const double gampl = detail::recip_gamma_1p(mu);
    const double gammi = detail::recip_gamma_1p(-mu);

    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = half_w * half_w;
    double sum1 = p;
    const double mu2 = mu * mu;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw NumericalFailure("bessel_k: Temme series did not converge", sum, sum);
    // K_{mu+1} = sum1 * 2/w, so w^{mu+1} K_{mu+1} = 2 w^mu sum1
    const double wmu = std::pow(w, mu);
    const double ew = std::exp(w);
    return {ew * wmu * sum, ew * 2.0 * wmu * sum1};
}

// Steed's continued fraction CF2 with Thompson-Barnett summation, w > 2.
FrakPair steed_cf2_scaled(double mu, double w) {
    double b = 2.0 * (1.0 + w);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw NumericalFailure("bessel_k: continued fraction did not converge", s, s);
    h = a1 * h;
    const double kmu = std::sqrt(std::numbers::pi / (2.0 * w)) / s;
    const double k1 = kmu * (mu + w + 0.5 - h) / w;
    const double wmu = std::pow(w, mu);
    return {wmu * kmu, wmu * w * k1};
}

bool is_half_integer(double nu) {
    const double twice = 2.0 * nu;
    return twice == std::floor(twice) && std::fmod(std::abs(twice), 2.0) == 1.0;
}

// Terminating expansion of K_{n+1/2}; every term is positive.
double half_integer_scaled(int n, double w) {
    // term_k = (n+k)! / (k! (n-k)!) (2w)^{-k} w^n, summed from k = n down.
    double term = 1.0;
    for (int j = 1; j <= 2 * n - 1; j += 2) term *= j;  // (2n-1)!!
    double sum = term;
    for (int k = n; k >= 1; --k) {
        term *= 2.0 * w * k / static_cast<double>((n + k) * (n - k + 1));
        sum += term;
    }
    return std::sqrt(std::numbers::pi / 2.0) * sum;
}

double frak_scaled_nonnegative(double nu, double w) {
    if (is_half_integer(nu)) return half_integer_scaled(static_cast<int>(nu - 0.5), w);

    const int steps = static_cast<int>(nu + 0.5);
    const double mu = nu - steps;
    const FrakPair start = w <= 2.0 ? temme_series_scaled(mu, w) : steed_cf2_scaled(mu, w);
    if (steps == 0) return start.lower;

    double lower = start.lower;
    double upper = start.upper;
    const double w2 = w * w;
    for (int i = 1; i < steps; ++i) {
        const double next = w2 * lower + 2.0 * (mu + i) * upper;
        lower = upper;
        upper = next;
    }
    return upper;
}

void check_arguments(double nu, double w, const char* who) {
    if (!(w > 0.0) || !std::isfinite(w))
        throw ParameterError(std::string(who) + ": argument must be positive and finite, got " +
                             std::to_string(w));
    if (!std::isfinite(nu) || std::abs(nu) > kMaxOrder)
        throw ParameterError(std::string(who) + ": order must satisfy |nu| <= 50, got " +
                             std::to_string(nu));
}

}  // namespace

double frak_k_scaled(double nu, double w) {
    check_arguments(nu, w, "frak_k");
    if (nu >= 0.0) return frak_scaled_nonnegative(nu, w);
    // K_{-nu} = K_nu, hence frak_{nu}(w) = w^{2 nu} frak_{-nu}(w)
    return std::pow(w, 2.0 * nu) * frak_scaled_nonnegative(-nu, w);
}

double frak_k(double nu, double w) {
    const double scaled = frak_k_scaled(nu, w);
    return scaled * std::exp(-w);
}

bool frak_k_underflows(double nu, double w) {
    return frak_k(nu, w) == 0.0 && frak_k_scaled(nu, w) != 0.0;
}

double bessel_k(double nu, double w) {
    check_arguments(nu, w, "bessel_k");
    const double order = std::abs(nu);
    return frak_scaled_nonnegative(order, w) * std::exp(-w) * std::pow(w, -order);
}

}  // namespace vacpol::specialfns
