#pragma once

#include "vacpol/types.hpp"

// Vacuum polarization next to a semitransparent plane (delta / delta-prime
// family labelled by U(2)). The couplings enter only through diagonal
// coefficients, so nothing here depends on omega.
namespace vacpol::semitransparent {

/// Structural checks plus positivity: gamma/(alpha+sigma) > -m (beta = 0) or
/// Lambda_- > -m (beta != 0); with >= 0 in place of > -m when m = 0.
void check_positivity(const SemitransparentBC& bc, double m);

SpectrumReport spectrum(const SemitransparentBC& bc, double m);

DiagonalCoefficients diagonal_coefficients(const SemitransparentBC& bc, double x1);

double free_term(const FieldConfig& cfg);
double plane_term(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);
double plane_term_oracle(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);

double regularized_polarization(const FieldConfig& cfg, const SemitransparentBC& bc, double x1,
                                double u);
double regularized_polarization_oracle(const FieldConfig& cfg, const SemitransparentBC& bc,
                                       double x1, double u);
LaurentFit laurent_fit(const FieldConfig& cfg, const SemitransparentBC& bc, double x1,
                       double eps = 1e-3);
PolarizationValue renormalize_at_zero(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);
PolarizationValue evaluate(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);

double small_x_asymptotic(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);
double large_x_asymptotic(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);

PolarizationValue massless_value(const FieldConfig& cfg, const SemitransparentBC& bc, double x1);

}  // namespace vacpol::semitransparent
