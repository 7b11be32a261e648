#pragma once

#include <complex>

#include "vacpol/types.hpp"

// Derived constants of the semitransparent (delta / delta-prime) family.
namespace vacpol::couplings {

/// Below this |beta| the beta = 0 formulas are used. The two branches are
/// separate families; nothing interpolates between them.
inline constexpr double kBetaThreshold = 1e-12;

bool beta_branch(const SemitransparentBC& bc);

/// gamma / (alpha + sigma), the delta-branch decay rate. Throws if alpha + sigma = 0.
double delta_rate(const SemitransparentBC& bc);

struct Rates {
    double plus;
    double minus;
};

/// Lambda_+- = (alpha+sigma)/(2 beta) +- sqrt((alpha-sigma)^2 + 4)/(2|beta|), beta != 0.
Rates lambdas(const SemitransparentBC& bc);

/// Kernel coefficient L(x, y) (beta = 0); complex only across the wall.
std::complex<double> L(const SemitransparentBC& bc, double x, double y);

/// Kernel coefficients M_+-(x, y) (beta != 0).
std::complex<double> M_plus(const SemitransparentBC& bc, double x, double y);
std::complex<double> M_minus(const SemitransparentBC& bc, double x, double y);

}  // namespace vacpol::couplings
