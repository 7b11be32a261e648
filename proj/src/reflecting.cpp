#include "vacpol/reflecting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polarization_common.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::reflecting {

using detail::fmt;
using std::numbers::pi;

namespace {

void check_x(double x1) {
    if (!std::isfinite(x1) || x1 == 0.0)
        throw ParameterError("x1 must be finite and nonzero (the observable diverges on the plane)");
}

void check_coefficient(const RobinCoefficient& b) {
    if (!b.dirichlet && !std::isfinite(b.value))
        throw ParameterError("Robin coefficient must be finite or the Dirichlet marker");
}

void check_massive(const FieldConfig& cfg) {
    validate(cfg);
    if (!(cfg.m > 0.0)) throw ParameterError("this operation needs m > 0");
}

std::string side_name(double x1) { return x1 > 0.0 ? "b+" : "b-"; }

std::string describe(const FieldConfig& cfg, const RobinCoefficient& b) {
    std::string s = "reflecting/";
    s += cfg.d % 2 == 0 ? "even-d/" : "odd-d/";
    if (b.dirichlet) return s + "dirichlet";
    if (b.value == 0.0) return s + "neumann";
    return s + "robin";
}

// Bracket of the plane term without the prefactor and without e^{-2m|x|}.
double robin_bracket_scaled(int d, double m, double b, double x1, double u) {
    const double ax = std::abs(x1);
    const double w0 = 2.0 * m * ax;
    const double nu = 0.5 * (d - 1 - u);
    double bracket = specialfns::frak_k_scaled(nu, w0);
    if (b != 0.0) {
        const double rate = 2.0 * b * ax;
        bracket -= 2.0 * rate * detail::scaled_frak_integral(rate, u - d + 1, nu, w0);
    }
    return bracket;
}

}  // namespace

void check_positivity(const ReflectingBC& bc, double m) {
    for (const RobinCoefficient* b : {&bc.plus, &bc.minus}) {
        check_coefficient(*b);
        if (b->dirichlet) continue;
        const bool ok = m > 0.0 ? b->value > -m : b->value >= 0.0;
        if (!ok)
            throw ParameterError("positivity violated: Robin coefficient " + fmt(b->value) +
                                 (m > 0.0 ? " must exceed -m = " + fmt(-m) : std::string(" must be >= 0 for m = 0")));
    }
}

SpectrumReport spectrum(const ReflectingBC& bc, double m) {
    if (!std::isfinite(m) || m < 0.0) throw ParameterError("mass must be >= 0");
    check_coefficient(bc.plus);
    check_coefficient(bc.minus);
    SpectrumReport rep;
    rep.continuous_threshold = m * m;
    rep.positive = true;
    for (const RobinCoefficient* b : {&bc.plus, &bc.minus}) {
        if (b->dirichlet) continue;
        if (b->value < 0.0) rep.point_eigenvalues.push_back(m * m - b->value * b->value);
        const bool ok = m > 0.0 ? b->value > -m : b->value >= 0.0;
        rep.positive = rep.positive && ok;
    }
    std::sort(rep.point_eigenvalues.begin(), rep.point_eigenvalues.end());
    return rep;
}

double free_term(const FieldConfig& cfg) {
    validate(cfg);
    return detail::free_term(cfg);
}

double plane_term_dn(const FieldConfig& cfg, double x1, int sign) {
    check_massive(cfg);
    check_x(x1);
    if (sign != 1 && sign != -1) throw ParameterError("sign must be +1 (Neumann) or -1 (Dirichlet)");
    const double w0 = 2.0 * cfg.m * std::abs(x1);
    return sign * detail::plane_prefactor(cfg.d, x1) * specialfns::frak_k(0.5 * (cfg.d - 1), w0);
}

double plane_term(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    const RobinCoefficient& b = bc.side(x1);
    if (b.dirichlet) return plane_term_dn(cfg, x1, -1);
    const double w0 = 2.0 * cfg.m * std::abs(x1);
    return detail::plane_prefactor(cfg.d, x1) * std::exp(-w0) *
           robin_bracket_scaled(cfg.d, cfg.m, b.value, x1, 0.0);
}

double plane_term_oracle(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    const RobinCoefficient& b = bc.side(x1);
    const double ax = std::abs(x1);
    auto bracket = [&](double tau) {
        const double image = std::exp(-ax * ax / tau);
        if (b.dirichlet) return -image;
        if (b.value == 0.0) return image;
        return image - 2.0 * b.value * detail::gaussian_exponential_quad(b.value, 2.0 * ax, tau);
    };
    return detail::tau_representation(cfg, x1, 0.0, false, bracket);
}

double regularized_polarization(const FieldConfig& cfg, const ReflectingBC& bc, double x1, double u) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    if (!std::isfinite(u)) throw ParameterError("u must be finite");
    const double first = detail::continued_free_part(cfg, u);
    const RobinCoefficient& b = bc.side(x1);
    const double w0 = 2.0 * cfg.m * std::abs(x1);
    const double nu = 0.5 * (cfg.d - 1 - u);
    double bracket;
    if (b.dirichlet)
        bracket = -specialfns::frak_k_scaled(nu, w0);
    else
        bracket = robin_bracket_scaled(cfg.d, cfg.m, b.value, x1, u);
    return first + detail::continued_prefactor(cfg, x1, u) * std::exp(-w0) * bracket;
}

double regularized_polarization_oracle(const FieldConfig& cfg, const ReflectingBC& bc, double x1,
                                       double u) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    if (!(u > cfg.d - 1))
        throw ParameterError("tau representation converges only for u > d - 1, got u = " + fmt(u));
    const RobinCoefficient& b = bc.side(x1);
    const double ax = std::abs(x1);
    auto bracket = [&](double tau) {
        const double image = std::exp(-ax * ax / tau);
        if (b.dirichlet) return -image;
        if (b.value == 0.0) return image;
        return image - 2.0 * b.value * detail::gaussian_exponential_quad(b.value, 2.0 * ax, tau);
    };
    return detail::tau_representation(cfg, x1, u, true, bracket);
}

LaurentFit laurent_fit(const FieldConfig& cfg, const ReflectingBC& bc, double x1, double eps) {
    return detail::fit_laurent([&](double u) { return regularized_polarization(cfg, bc, x1, u); }, eps);
}

PolarizationValue renormalize_at_zero(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    PolarizationValue v = evaluate(cfg, bc, x1);
    if (cfg.m == 0.0) throw ParameterError("renormalize_at_zero needs m > 0");
    detail::check_renormalization(
        cfg, [&](double u) { return regularized_polarization(cfg, bc, x1, u); }, v.total);
    return v;
}

PolarizationValue evaluate(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    validate(cfg);
    if (cfg.m == 0.0) return massless_value(cfg, bc, x1);
    PolarizationValue v;
    v.free_term = free_term(cfg);
    v.plane_term = plane_term(cfg, bc, x1);
    v.total = v.free_term + v.plane_term;
    const RobinCoefficient& b = bc.side(x1);
    v.branch = describe(cfg, b);
    if (!b.dirichlet && b.value <= -cfg.m + 1e-6 * cfg.m)
        v.warnings.push_back("slow decay: " + side_name(x1) + " = " + fmt(b.value) +
                             " is within 1e-6 m of the threshold -m");
    return v;
}

double small_x_asymptotic(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    check_coefficient(bc.side(x1));
    const double lead = detail::small_x_leading(cfg, x1);
    return bc.side(x1).dirichlet ? -lead : lead;
}

double large_x_asymptotic(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    const RobinCoefficient& b = bc.side(x1);
    check_coefficient(b);
    const double ratio = b.dirichlet ? -1.0 : (cfg.m - b.value) / (cfg.m + b.value);
    return detail::large_x_envelope(cfg, x1) * ratio;
}

PolarizationValue massless_value(const FieldConfig& cfg, const ReflectingBC& bc, double x1) {
    validate(cfg);
    if (cfg.m != 0.0) throw ParameterError("massless_value needs m = 0");
    check_x(x1);
    check_positivity(bc, 0.0);
    const RobinCoefficient& b = bc.side(x1);
    const double ax = std::abs(x1);
    PolarizationValue v;
    v.branch = describe(cfg, b) + "/massless";

    if (cfg.d == 1) {
        for (const RobinCoefficient* c : {&bc.plus, &bc.minus})
            if (c->is_neumann())
                throw InfraredDivergence(
                    "massless d = 1 with a Neumann face is infrared divergent");
        double value = std::log(2.0 * cfg.kappa * ax) + specialfns::euler_gamma();
        if (!b.dirichlet)
            value += 2.0 * specialfns::upper_inc_gamma_scaled(0.0, 2.0 * b.value * ax);
        v.total = value / (2.0 * pi);
        // the free term diverges on its own; only the sum is reported
        v.free_term = std::nan("");
        v.plane_term = std::nan("");
        v.warnings.push_back("d = 1 massless: free and plane terms diverge separately; only the total is finite");
        return v;
    }

    const double c = detail::wall_coefficient(cfg.d, x1);
    double bracket;
    if (b.dirichlet)
        bracket = -1.0;
    else if (b.value == 0.0)
        bracket = 1.0;
    else {
        const double w = 2.0 * b.value * ax;
        bracket = 1.0 - 2.0 * w * specialfns::upper_inc_gamma_scaled(2.0 - cfg.d, w);
    }
    v.free_term = 0.0;
    v.plane_term = c * bracket;
    v.total = v.plane_term;
    return v;
}

}  // namespace vacpol::reflecting
