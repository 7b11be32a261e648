#include "vacpol/heatkernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vacpol/couplings.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::heat {
namespace {

void check_query(double tau, double x, double y) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw ParameterError("heat kernel: tau must be positive, got " + std::to_string(tau));
    if (!std::isfinite(x) || !std::isfinite(y) || x == 0.0 || y == 0.0)
        throw ParameterError("heat kernel: x1 and y1 must be finite and nonzero");
}

void check_half_line(double tau, double x, double y, double b, double m) {
    check_query(tau, x, y);
    if (x < 0.0 || y < 0.0) throw ParameterError("half-line kernel needs x1, y1 > 0");
    if (!std::isfinite(b)) throw ParameterError("Robin coefficient must be finite");
    if (!std::isfinite(m) || m < 0.0) throw ParameterError("mass must be >= 0");
}

double gaussian(double z, double tau) {
    return std::exp(-z * z / (4.0 * tau)) / std::sqrt(4.0 * std::numbers::pi * tau);
}

}  // namespace

double gaussian_exponential_integral(double c, double s, double tau) {
    const double rt = std::sqrt(tau);
    const double z = c * rt + s / (2.0 * rt);
    const double pre = std::sqrt(std::numbers::pi * tau);
    if (z >= 0.0) return pre * std::exp(-s * s / (4.0 * tau)) * specialfns::erfcx(z);
    // erfc(z) = 2 - erfc(-z) keeps the growing branch explicit
    return pre * (2.0 * std::exp(c * s + c * c * tau) -
                  std::exp(-s * s / (4.0 * tau)) * specialfns::erfcx(-z));
}

double robin_half_line_kernel(double tau, double x, double y, double b, double m) {
    check_half_line(tau, x, y, b, m);
    const double s = x + y;
    double k = gaussian(x - y, tau) + gaussian(s, tau);
    if (b != 0.0)
        k -= 2.0 * b * gaussian_exponential_integral(b, s, tau) /
             std::sqrt(4.0 * std::numbers::pi * tau);
    return std::exp(-m * m * tau) * k;
}

double robin_kernel_integral_form(double tau, double x, double y, double b, double m) {
    check_half_line(tau, x, y, b, m);
    const double s = x + y;
    double k = gaussian(x - y, tau) + gaussian(s, tau);
    if (b != 0.0) {
        auto f = [&](double w) { return std::exp(-b * w - (w + s) * (w + s) / (4.0 * tau)); };
        const quad::QuadSpec spec{1e-300, 1e-13, 4000};
        double integral = 0.0;
        const double peak = -s - 2.0 * b * tau;  // maximum of the exponent
        const double width = std::sqrt(tau);
        if (peak > 0.0) {
            integral += quad::integrate_finite(f, 0.0, peak, spec).value;
            auto shifted = [&](double w) { return f(w + peak); };
            integral += quad::integrate_semi_infinite(shifted, spec, width).value;
        } else {
            const double slope = b + s / (2.0 * tau);
            integral = quad::integrate_semi_infinite(f, spec, std::min(width, 1.0 / slope)).value;
        }
        k -= 2.0 * b * integral / std::sqrt(4.0 * std::numbers::pi * tau);
    }
    return std::exp(-m * m * tau) * k;
}

double dirichlet_half_line_kernel(double tau, double x, double y, double m) {
    check_half_line(tau, x, y, 0.0, m);
    return std::exp(-m * m * tau) * (gaussian(x - y, tau) - gaussian(x + y, tau));
}

quad::QuadResult spectral_oracle_robin(double tau, double x, double y, double b, double m) {
    check_half_line(tau, x, y, b, m);
    if (tau < 1e-3) throw ParameterError("spectral oracle needs tau >= 1e-3");
    const double kmax = 10.0 / std::sqrt(tau);
    auto f = [&](double k) {
        const double fx = k * std::cos(k * x) + b * std::sin(k * x);
        const double fy = k * std::cos(k * y) + b * std::sin(k * y);
        return std::exp(-tau * k * k) * fx * fy / (k * k + b * b);
    };
    const quad::QuadSpec spec{1e-14, 1e-12, 20000};
    quad::QuadResult r = quad::integrate_finite(f, 0.0, kmax, spec);
    r.value *= 2.0 / std::numbers::pi;
    r.error *= 2.0 / std::numbers::pi;
    // |integrand| <= e^{-tau k^2}, so the dropped tail is at most erfc(10)/sqrt(pi tau)
    r.error += std::erfc(10.0) / std::sqrt(std::numbers::pi * tau);
    if (b < 0.0) r.value += 2.0 * std::abs(b) * std::exp(tau * b * b - std::abs(b) * (x + y));
    const double damp = std::exp(-m * m * tau);
    r.value *= damp;
    r.error *= damp;
    return r;
}

double reflecting_kernel(double tau, double x, double y, const ReflectingBC& bc, double m) {
    check_query(tau, x, y);
    for (const RobinCoefficient* c : {&bc.plus, &bc.minus}) {
        if (c->dirichlet) continue;
        const bool ok = m > 0.0 ? c->value > -m : c->value >= 0.0;
        if (!ok)
            throw ParameterError("Robin coefficient " + std::to_string(c->value) +
                                 " violates positivity for m = " + std::to_string(m));
    }
    if ((x > 0.0) != (y > 0.0)) return 0.0;
    const RobinCoefficient& b = bc.side(x);
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (b.dirichlet) return dirichlet_half_line_kernel(tau, ax, ay, m);
    return robin_half_line_kernel(tau, ax, ay, b.value, m);
}

std::complex<double> semitransparent_kernel(double tau, double x, double y,
                                            const SemitransparentBC& bc, double m) {
    check_query(tau, x, y);
    validate(bc);
    if (!std::isfinite(m) || m < 0.0) throw ParameterError("mass must be >= 0");

    const double s = std::abs(x) + std::abs(y);
    const double image = std::exp(-s * s / (4.0 * tau));
    std::complex<double> extra;
    if (!couplings::beta_branch(bc)) {
        const double g = couplings::delta_rate(bc);
        if (m > 0.0 ? !(g > -m) : !(g >= 0.0))
            throw ParameterError("delta coupling violates positivity: gamma/(alpha+sigma) = " +
                                 std::to_string(g));
        const std::complex<double> l = couplings::L(bc, x, y);
        extra = l * image;
        if (g != 0.0) extra -= g * (1.0 + l) * gaussian_exponential_integral(g, s, tau);
    } else {
        const auto lam = couplings::lambdas(bc);
        if (m > 0.0 ? !(lam.minus > -m) : !(lam.minus >= 0.0))
            throw ParameterError("Lambda_- = " + std::to_string(lam.minus) + " violates positivity");
        const double sg = x * y > 0.0 ? 1.0 : -1.0;
        extra = sg * image;
        const std::complex<double> mp = couplings::M_plus(bc, x, y);
        const std::complex<double> mm = couplings::M_minus(bc, x, y);
        if (mp != 0.0) extra += mp * gaussian_exponential_integral(lam.plus, s, tau);
        if (mm != 0.0) extra -= mm * gaussian_exponential_integral(lam.minus, s, tau);
    }
    const double pre = std::exp(-m * m * tau) / std::sqrt(4.0 * std::numbers::pi * tau);
    return pre * (std::exp(-(x - y) * (x - y) / (4.0 * tau)) + extra);
}

}  // namespace vacpol::heat
