#include "vacpol/semitransparent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polarization_common.hpp"
#include "vacpol/couplings.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::semitransparent {

using detail::fmt;
using std::numbers::pi;

namespace {

void check_x(double x1) {
    if (!std::isfinite(x1) || x1 == 0.0)
        throw ParameterError("x1 must be finite and nonzero (the observable diverges on the plane)");
}

void check_massive(const FieldConfig& cfg) {
    validate(cfg);
    if (!(cfg.m > 0.0)) throw ParameterError("this operation needs m > 0");
}

double sgn(double v) { return v > 0.0 ? 1.0 : -1.0; }

std::string describe(const FieldConfig& cfg, const SemitransparentBC& bc) {
    std::string s = "semitransparent/";
    s += cfg.d % 2 == 0 ? "even-d/" : "odd-d/";
    return s + (couplings::beta_branch(bc) ? "beta!=0" : "beta=0");
}

// Weighted terms of the plane bracket, each with its own decay rate (in units of 2|x|).
struct Bracket {
    double lead;  // coefficient of frak(2m|x|)
    struct Term {
        double weight;  // multiplies 2|x| * rate-free integral
        double rate;
    };
    Term terms[2];
    int count = 0;
};

Bracket bracket_terms(const SemitransparentBC& bc, double x1) {
    const DiagonalCoefficients c = diagonal_coefficients(bc, x1);
    Bracket b{};
    if (!c.beta_branch) {
        const double g = couplings::delta_rate(bc);
        b.lead = c.L;
        // -(1+L) * (2 g |x|) * integral
        if (g != 0.0) b.terms[b.count++] = {-(1.0 + c.L) * g, g};
    } else {
        const auto lam = couplings::lambdas(bc);
        b.lead = 1.0;
        if (c.M_plus != 0.0) b.terms[b.count++] = {c.M_plus, lam.plus};
        if (c.M_minus != 0.0) b.terms[b.count++] = {-c.M_minus, lam.minus};
    }
    return b;
}

// Plane bracket at order nu = (d-1-u)/2 and weight (v+1)^{u-d+1}, without e^{-2m|x|}.
double bracket_scaled(const FieldConfig& cfg, const SemitransparentBC& bc, double x1, double u) {
    const double ax = std::abs(x1);
    const double w0 = 2.0 * cfg.m * ax;
    const double nu = 0.5 * (cfg.d - 1 - u);
    const Bracket b = bracket_terms(bc, x1);
    double value = b.lead == 0.0 ? 0.0 : b.lead * specialfns::frak_k_scaled(nu, w0);
    for (int i = 0; i < b.count; ++i) {
        const double rate = 2.0 * b.terms[i].rate * ax;
        value += b.terms[i].weight * 2.0 * ax *
                 detail::scaled_frak_integral(rate, u - cfg.d + 1, nu, w0);
    }
    return value;
}

// tau-representation bracket without the constant 1.
std::function<double(double)> tau_bracket(const SemitransparentBC& bc, double x1) {
    const double ax = std::abs(x1);
    const Bracket b = bracket_terms(bc, x1);
    return [=](double tau) {
        double value = b.lead * std::exp(-ax * ax / tau);
        for (int i = 0; i < b.count; ++i)
            value += b.terms[i].weight *
                     detail::gaussian_exponential_quad(b.terms[i].rate, 2.0 * ax, tau);
        return value;
    };
}

}  // namespace

void check_positivity(const SemitransparentBC& bc, double m) {
    validate(bc);
    if (!std::isfinite(m) || m < 0.0) throw ParameterError("mass must be >= 0");
    if (!couplings::beta_branch(bc)) {
        const double g = couplings::delta_rate(bc);
        const bool ok = m > 0.0 ? g > -m : g >= 0.0;
        if (!ok)
            throw ParameterError("positivity violated: gamma/(alpha+sigma) = " + fmt(g) +
                                 (m > 0.0 ? " must exceed -m" : std::string(" must be >= 0 for m = 0")));
        return;
    }
    const auto lam = couplings::lambdas(bc);
    const bool ok = m > 0.0 ? lam.minus > -m : lam.minus >= 0.0;
    if (!ok)
        throw ParameterError("positivity violated: Lambda_- = " + fmt(lam.minus) +
                             (m > 0.0 ? " must exceed -m" : std::string(" must be >= 0 for m = 0")));
}

SpectrumReport spectrum(const SemitransparentBC& bc, double m) {
    validate(bc);
    if (!std::isfinite(m) || m < 0.0) throw ParameterError("mass must be >= 0");
    SpectrumReport rep;
    rep.continuous_threshold = m * m;
    if (!couplings::beta_branch(bc)) {
        const double g = couplings::delta_rate(bc);
        if (g < 0.0) rep.point_eigenvalues.push_back(m * m - g * g);
        rep.positive = m > 0.0 ? g > -m : g >= 0.0;
        return rep;
    }
    const auto lam = couplings::lambdas(bc);
    rep.lambda_plus = lam.plus;
    rep.lambda_minus = lam.minus;
    if (lam.minus < 0.0) rep.point_eigenvalues.push_back(m * m - lam.minus * lam.minus);
    if (lam.plus < 0.0) rep.point_eigenvalues.push_back(m * m - lam.plus * lam.plus);
    std::sort(rep.point_eigenvalues.begin(), rep.point_eigenvalues.end());
    rep.positive = m > 0.0 ? lam.minus > -m : lam.minus >= 0.0;
    return rep;
}

DiagonalCoefficients diagonal_coefficients(const SemitransparentBC& bc, double x1) {
    validate(bc);
    check_x(x1);
    DiagonalCoefficients c;
    c.beta_branch = couplings::beta_branch(bc);
    if (!c.beta_branch) {
        c.L = (bc.alpha - bc.sigma) / (bc.alpha + bc.sigma) * sgn(x1);
        return c;
    }
    c.M_plus = couplings::M_plus(bc, x1, x1).real();
    c.M_minus = couplings::M_minus(bc, x1, x1).real();
    return c;
}

double free_term(const FieldConfig& cfg) {
    validate(cfg);
    return detail::free_term(cfg);
}

double plane_term(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    const double w0 = 2.0 * cfg.m * std::abs(x1);
    return detail::plane_prefactor(cfg.d, x1) * std::exp(-w0) * bracket_scaled(cfg, bc, x1, 0.0);
}

double plane_term_oracle(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    return detail::tau_representation(cfg, x1, 0.0, false, tau_bracket(bc, x1));
}

double regularized_polarization(const FieldConfig& cfg, const SemitransparentBC& bc, double x1,
                                double u) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    if (!std::isfinite(u)) throw ParameterError("u must be finite");
    const double first = detail::continued_free_part(cfg, u);
    const double w0 = 2.0 * cfg.m * std::abs(x1);
    return first + detail::continued_prefactor(cfg, x1, u) * std::exp(-w0) *
                       bracket_scaled(cfg, bc, x1, u);
}

double regularized_polarization_oracle(const FieldConfig& cfg, const SemitransparentBC& bc,
                                       double x1, double u) {
    check_massive(cfg);
    check_x(x1);
    check_positivity(bc, cfg.m);
    if (!(u > cfg.d - 1))
        throw ParameterError("tau representation converges only for u > d - 1, got u = " + fmt(u));
    return detail::tau_representation(cfg, x1, u, true, tau_bracket(bc, x1));
}

LaurentFit laurent_fit(const FieldConfig& cfg, const SemitransparentBC& bc, double x1, double eps) {
    return detail::fit_laurent([&](double u) { return regularized_polarization(cfg, bc, x1, u); }, eps);
}

PolarizationValue renormalize_at_zero(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    if (cfg.m == 0.0) throw ParameterError("renormalize_at_zero needs m > 0");
    PolarizationValue v = evaluate(cfg, bc, x1);
    detail::check_renormalization(
        cfg, [&](double u) { return regularized_polarization(cfg, bc, x1, u); }, v.total);
    return v;
}

PolarizationValue evaluate(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    validate(cfg);
    if (cfg.m == 0.0) return massless_value(cfg, bc, x1);
    PolarizationValue v;
    v.free_term = free_term(cfg);
    v.plane_term = plane_term(cfg, bc, x1);
    v.total = v.free_term + v.plane_term;
    v.branch = describe(cfg, bc);
    const double m = cfg.m;
    if (couplings::beta_branch(bc)) {
        const double lm = couplings::lambdas(bc).minus;
        if (lm + m < 1e-3 * m)
            v.warnings.push_back("slow decay: Lambda_- + m = " + fmt(lm + m) + " is below 1e-3 m");
        else if (lm < 0.0)
            v.warnings.push_back("slow decay: Lambda_- = " + fmt(lm) +
                                 " < 0 (bound state); the Lambda_- integrand grows before it decays");
    } else {
        const double g = couplings::delta_rate(bc);
        if (g + m < 1e-3 * m)
            v.warnings.push_back("slow decay: gamma/(alpha+sigma) + m = " + fmt(g + m) +
                                 " is below 1e-3 m");
        else if (g < 0.0)
            v.warnings.push_back("slow decay: gamma/(alpha+sigma) = " + fmt(g) +
                                 " < 0 (bound state); the w-integrand grows before it decays");
    }
    return v;
}

double small_x_asymptotic(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    validate(bc);
    const double lead = detail::small_x_leading(cfg, x1);
    if (couplings::beta_branch(bc)) return lead;
    return sgn(x1) * (bc.alpha - bc.sigma) / (bc.alpha + bc.sigma) * lead;
}

double large_x_asymptotic(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    check_massive(cfg);
    check_x(x1);
    validate(bc);
    const double m = cfg.m;
    const double g = bc.gamma_coupling;
    const double sum = bc.alpha + bc.sigma;
    const double diff = bc.alpha - bc.sigma;
    double ratio;
    if (!couplings::beta_branch(bc))
        ratio = (diff * m * sgn(x1) - g) / (sum * m + g);
    else
        ratio = (bc.beta * m * m + diff * m * sgn(x1) - g) / (bc.beta * m * m + sum * m + g);
    return detail::large_x_envelope(cfg, x1) * ratio;
}

PolarizationValue massless_value(const FieldConfig& cfg, const SemitransparentBC& bc, double x1) {
    validate(cfg);
    if (cfg.m != 0.0) throw ParameterError("massless_value needs m = 0");
    check_x(x1);
    check_positivity(bc, 0.0);
    const double ax = std::abs(x1);
    const bool beta_branch = couplings::beta_branch(bc);
    PolarizationValue v;
    v.branch = describe(cfg, bc) + "/massless";

    if (cfg.d == 1) {
        // the log m of the free term cancels only if the zero-energy reflection is -1,
        // which needs gamma != 0 on either branch
        if (bc.gamma_coupling == 0.0)
            throw InfraredDivergence(std::string("massless d = 1 with gamma = 0 (") +
                                     (beta_branch ? "beta != 0" : "beta = 0") +
                                     ") is infrared divergent");
        double value = std::log(2.0 * cfg.kappa * ax) + specialfns::euler_gamma();
        if (!beta_branch) {
            const double g = couplings::delta_rate(bc);
            const double l = (bc.alpha - bc.sigma) / (bc.alpha + bc.sigma) * sgn(x1);
            value += (1.0 + l) * specialfns::upper_inc_gamma_scaled(0.0, 2.0 * g * ax);
        } else {
            const auto lam = couplings::lambdas(bc);
            const DiagonalCoefficients dc = diagonal_coefficients(bc, x1);
            value -= dc.M_plus / lam.plus * specialfns::upper_inc_gamma_scaled(0.0, 2.0 * lam.plus * ax);
            value += dc.M_minus / lam.minus * specialfns::upper_inc_gamma_scaled(0.0, 2.0 * lam.minus * ax);
        }
        v.total = value / (2.0 * pi);
        v.free_term = std::nan("");
        v.plane_term = std::nan("");
        v.warnings.push_back("d = 1 massless: free and plane terms diverge separately; only the total is finite");
        return v;
    }

    const double c = detail::wall_coefficient(cfg.d, x1);
    const double a = 2.0 - cfg.d;
    // 2|x| e^{w} w^{d-2} Gamma(2-d, w) with w = 2 rate |x|: the massless limit of the v-integral
    auto tail = [&](double rate) {
        const double w = 2.0 * rate * ax;
        if (w == 0.0 && cfg.d == 2)
            throw InfraredDivergence("massless d = 2 integral with zero decay rate diverges logarithmically");
        return 2.0 * ax * specialfns::upper_inc_gamma_scaled(a, w);
    };
    double bracket;
    if (!beta_branch) {
        const double g = couplings::delta_rate(bc);
        const double l = (bc.alpha - bc.sigma) / (bc.alpha + bc.sigma) * sgn(x1);
        bracket = l;
        if (g != 0.0) bracket -= (1.0 + l) * g * tail(g);
    } else {
        const auto lam = couplings::lambdas(bc);
        const DiagonalCoefficients dc = diagonal_coefficients(bc, x1);
        bracket = 1.0;
        if (dc.M_plus != 0.0) bracket += dc.M_plus * tail(lam.plus);
        // Lambda_- = 0 forces gamma = 0 and hence M_- = 0, so this term drops out exactly
        if (dc.M_minus != 0.0) bracket -= dc.M_minus * tail(lam.minus);
    }
    v.free_term = 0.0;
    v.plane_term = c * bracket;
    v.total = v.plane_term;
    return v;
}

}  // namespace vacpol::semitransparent
