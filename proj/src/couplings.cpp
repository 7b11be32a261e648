#include "vacpol/couplings.hpp"

#include <cmath>
#include <string>

#include "vacpol/errors.hpp"

namespace vacpol {

void validate(const FieldConfig& cfg) {
    if (cfg.d < 1 || cfg.d > 11)
        throw ParameterError("dimension d must lie in [1, 11], got " + std::to_string(cfg.d));
    if (!std::isfinite(cfg.m) || cfg.m < 0.0)
        throw ParameterError("mass must be finite and >= 0, got " + std::to_string(cfg.m));
    if (!std::isfinite(cfg.kappa) || !(cfg.kappa > 0.0))
        throw ParameterError("kappa must be finite and > 0, got " + std::to_string(cfg.kappa));
}

void validate(const SemitransparentBC& bc) {
    const double vals[] = {bc.omega.real(), bc.omega.imag(), bc.alpha, bc.beta, bc.gamma_coupling,
                           bc.sigma};
    for (double v : vals)
        if (!std::isfinite(v)) throw ParameterError("semitransparent parameters must be finite");
    if (std::abs(std::abs(bc.omega) - 1.0) > 1e-12)
        throw ParameterError("omega must have unit modulus, |omega| = " +
                             std::to_string(std::abs(bc.omega)));
    const double det = bc.alpha * bc.sigma - bc.beta * bc.gamma_coupling;
    if (std::abs(det - 1.0) > 1e-12)
        throw ParameterError("need alpha*sigma - beta*gamma = 1, got " + std::to_string(det));
}

namespace couplings {

bool beta_branch(const SemitransparentBC& bc) { return std::abs(bc.beta) >= kBetaThreshold; }

double delta_rate(const SemitransparentBC& bc) {
    const double s = bc.alpha + bc.sigma;
    if (s == 0.0) throw ParameterError("alpha + sigma = 0 is not allowed when beta = 0");
    return bc.gamma_coupling / s;
}

Rates lambdas(const SemitransparentBC& bc) {
    if (!beta_branch(bc)) throw ParameterError("Lambda_+- are defined only for beta != 0");
    const double diff = bc.alpha - bc.sigma;
    const double root = std::sqrt(diff * diff + 4.0);
    const double center = (bc.alpha + bc.sigma) / (2.0 * bc.beta);
    const double spread = root / (2.0 * std::abs(bc.beta));
    return {center + spread, center - spread};
}

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

std::complex<double> phase_term(const SemitransparentBC& bc, double x) {
    return {bc.omega.real(), sgn(x) * bc.omega.imag()};
}

std::complex<double> m_coefficient(const SemitransparentBC& bc, double lam, double x, double y) {
    // residues of the reflection factor (beta k^2 + (alpha-sigma) sgn(x) k - gamma) / (beta k^2 + (alpha+sigma) k + gamma)
    // and of its transmitted counterpart 2 omega beta k / (...) at k = -Lambda
    const double diff = bc.alpha - bc.sigma;
    const double sum = bc.alpha + bc.sigma;
    const double pre = sgn(bc.beta) / std::sqrt(diff * diff + 4.0);
    if (x * y > 0.0) return -pre * (sum * lam - 2.0 * bc.gamma_coupling - diff * lam * sgn(x));
    return 2.0 * pre * lam * phase_term(bc, x);
}

}  // namespace

std::complex<double> L(const SemitransparentBC& bc, double x, double y) {
    const double sum = bc.alpha + bc.sigma;
    if (x * y > 0.0) return (bc.alpha - bc.sigma) / sum * sgn(x);
    return -(1.0 - 2.0 * phase_term(bc, x) / sum);
}

std::complex<double> M_plus(const SemitransparentBC& bc, double x, double y) {
    return m_coefficient(bc, lambdas(bc).plus, x, y);
}

std::complex<double> M_minus(const SemitransparentBC& bc, double x, double y) {
    return m_coefficient(bc, lambdas(bc).minus, x, y);
}

}  // namespace couplings
}  // namespace vacpol
