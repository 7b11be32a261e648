#include "polarization_common.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "vacpol/errors.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::detail {

namespace sf = specialfns;
using std::numbers::pi;

std::string fmt(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

double scaled_frak_integral(double rate, double p, double nu, double w0) {
    const double k = rate + w0;
    if (!(k > 0.0))
        throw ParameterError("v-integral does not converge: decay rate " + fmt(k) + " <= 0");
    auto f = [=](double v) {
        const double damp = std::exp(-k * v);
        if (damp == 0.0) return 0.0;
        return damp * std::pow(v + 1.0, p) * sf::frak_k_scaled(nu, w0 * (v + 1.0));
    };
    const quad::QuadSpec spec{1e-300, 1e-12, 5000};
    return quad::integrate_semi_infinite(f, spec, 1.0 / k).value;
}

double plane_prefactor(int d, double x) {
    return 1.0 / (std::pow(2.0, 0.5 * (3 * d - 1)) * std::pow(pi, 0.5 * (d + 1)) *
                  std::pow(std::abs(x), d - 1));
}

double wall_coefficient(int d, double x) {
    return std::tgamma(0.5 * (d - 1)) /
           (std::pow(4.0 * pi, 0.5 * (d + 1)) * std::pow(std::abs(x), d - 1));
}

double free_term(const FieldConfig& cfg) {
    const int d = cfg.d;
    const double m = cfg.m;
    if (m == 0.0) {
        if (d == 1) throw InfraredDivergence("free term diverges for a massless field in d = 1");
        return 0.0;
    }
    const double denom = std::pow(4.0 * pi, 0.5 * (d + 1)) * std::tgamma(0.5 * (d + 1));
    if (d % 2 == 0) {
        const double sign = (d / 2) % 2 == 0 ? 1.0 : -1.0;
        return sign * pi * std::pow(m, d - 1) / denom;
    }
    const int ell = (d - 1) / 2;
    const double sign = ell % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(m, d - 1) * (sf::harmonic(ell) + 2.0 * std::log(2.0 * cfg.kappa / m)) /
           denom;
}

double small_x_leading(const FieldConfig& cfg, double x) {
    const double ax = std::abs(x);
    if (cfg.d == 1) return -std::log(cfg.m * ax) / (2.0 * pi);
    if (cfg.d == 2) return 1.0 / (8.0 * pi * ax);
    return wall_coefficient(cfg.d, x);
}

double large_x_envelope(const FieldConfig& cfg, double x) {
    const double ax = std::abs(x);
    return std::pow(cfg.m, 0.5 * (cfg.d - 2)) / (2.0 * std::pow(4.0 * pi, 0.5 * cfg.d)) *
           std::exp(-2.0 * cfg.m * ax) / std::pow(ax, 0.5 * cfg.d);
}

double continued_free_part(const FieldConfig& cfg, double u) {
    const double a = 0.5 * (u - cfg.d + 1);
    const double n = std::nearbyint(a);
    if (n <= 0.0 && std::abs(a - n) < 1e-12) {
        const double pole = cfg.d - 1 + 2.0 * n;
        throw PoleError("regularized polarization has a pole at u = " + fmt(pole), pole);
    }
    const double m = cfg.m;
    const double mass_power = std::exp((cfg.d - 1) * std::log(m) + u * std::log(cfg.kappa / m));
    return mass_power * std::tgamma(a) * sf::rgamma(0.5 * (u + 1)) /
           (std::pow(2.0, cfg.d + 1) * std::pow(pi, 0.5 * cfg.d));
}

double continued_prefactor(const FieldConfig& cfg, double x, double u) {
    const double ax = std::abs(x);
    return std::pow(2.0, 0.5 * (u - 3 * cfg.d + 1)) * std::pow(cfg.kappa * ax, u) *
           sf::rgamma(0.5 * (u + 1)) / (std::pow(pi, 0.5 * cfg.d) * std::pow(ax, cfg.d - 1));
}

double gaussian_exponential_quad(double c, double s, double tau) {
    // exp(-c w - (w+s)^2/4tau) = exp(-s^2/4tau) exp(-a w - w^2/4tau), a = c + s/(2 tau)
    const double a = c + s / (2.0 * tau);
    const quad::QuadSpec spec{1e-300, 1e-13, 4000};
    if (a >= 0.0) {
        const double outer = std::exp(-s * s / (4.0 * tau));
        if (outer == 0.0) return 0.0;
        auto f = [=](double w) { return std::exp(-a * w - w * w / (4.0 * tau)); };
        const double width = 2.0 * std::sqrt(tau);
        const double scale = a > 0.0 ? std::min(1.0 / a, width) : width;
        return outer * quad::integrate_semi_infinite(f, spec, scale).value;
    }
    // interior maximum at w0 = -2 a tau
    const double outer = std::exp(-s * s / (4.0 * tau) + a * a * tau);
    if (outer == 0.0) return 0.0;
    const double w0 = -2.0 * a * tau;
    auto g = [=](double w) { return std::exp(-(w - w0) * (w - w0) / (4.0 * tau)); };
    const double left = quad::integrate_finite(g, 0.0, w0, spec).value;
    auto h = [=](double t) { return std::exp(-t * t / (4.0 * tau)); };
    const double right = quad::integrate_semi_infinite(h, spec, 2.0 * std::sqrt(tau)).value;
    return outer * (left + right);
}

double tau_representation(const FieldConfig& cfg, double x, double u, bool include_one,
                          const std::function<double(double)>& bracket) {
    const int d = cfg.d;
    const double m = cfg.m;
    const double one = include_one ? 1.0 : 0.0;
    auto f = [&](double s) {
        if (s == 0.0) return 0.0;
        const double damp = 2.0 * std::pow(s, u - d) * std::exp(-m * m * s * s);
        if (damp == 0.0) return 0.0;
        return damp * (one + bracket(s * s));
    };
    const quad::QuadSpec spec{1e-300, 1e-11, 5000};
    const double scale = std::sqrt(std::abs(x) / m);
    const double integral = quad::integrate_semi_infinite(f, spec, scale).value;
    return std::pow(cfg.kappa, u) * sf::rgamma(0.5 * (u + 1)) /
           (2.0 * std::pow(4.0 * pi, 0.5 * d)) * integral;
}

LaurentFit fit_laurent(const std::function<double(double)>& F, double eps) {
    const std::array<double, 4> us = {-2.0 * eps, -eps, eps, 2.0 * eps};
    std::array<double, 4> fs{};
    for (int i = 0; i < 4; ++i) fs[i] = F(us[i]);

    // normal equations for the basis (1/u, 1, u)
    double a[3][3] = {};
    double rhs[3] = {};
    for (int i = 0; i < 4; ++i) {
        const double phi[3] = {1.0 / us[i], 1.0, us[i]};
        for (int r = 0; r < 3; ++r) {
            rhs[r] += phi[r] * fs[i];
            for (int c = 0; c < 3; ++c) a[r][c] += phi[r] * phi[c];
        }
    }
    auto det3 = [](const double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double det = det3(a);
    double coef[3];
    for (int k = 0; k < 3; ++k) {
        double mk[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) mk[r][c] = c == k ? rhs[r] : a[r][c];
        coef[k] = det3(mk) / det;
    }

    double ss = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double r = fs[i] - (coef[0] / us[i] + coef[1] + coef[2] * us[i]);
        ss += r * r;
        scale = std::max(scale, std::abs(fs[i]));
    }
    const double rms = std::sqrt(ss / 4.0);
    return {coef[0], coef[1], coef[2], scale > 0.0 ? rms / scale : rms};
}

void check_renormalization(const FieldConfig& cfg, const std::function<double(double)>& F,
                           double closed_total) {
    constexpr double tol = 1e-6;
    const double allowed = tol * std::max(1.0, std::abs(closed_total));
    if (cfg.d % 2 == 0) {
        const double direct = F(0.0);
        if (std::abs(direct - closed_total) > allowed)
            throw NumericalFailure("continued formula at u = 0 (" + fmt(direct) +
                                       ") disagrees with free + plane (" + fmt(closed_total) + ")",
                                   direct, std::abs(direct - closed_total));
        return;
    }
    const LaurentFit fit = fit_laurent(F, 1e-3);
    if (fit.residual > tol)
        throw NumericalFailure("Laurent fit residual " + fmt(fit.residual) + " exceeds 1e-6", fit.c0,
                               fit.residual);
    if (std::abs(fit.c0 - closed_total) > allowed)
        throw NumericalFailure("Laurent fit c0 = " + fmt(fit.c0) + " disagrees with free + plane = " +
                                   fmt(closed_total),
                               fit.c0, std::abs(fit.c0 - closed_total));
}

}  // namespace vacpol::detail
