#pragma once

#include "vacpol/types.hpp"

// Vacuum polarization next to a perfectly reflecting plane with Robin
// coefficients b_+ (x1 > 0) and b_- (x1 < 0). All functions are pure.
namespace vacpol::reflecting {

/// Positivity of the reduced operator: b > -m on both faces (b >= 0 when m = 0).
void check_positivity(const ReflectingBC& bc, double m);

SpectrumReport spectrum(const ReflectingBC& bc, double m);

/// x1-independent part, identical for every boundary condition.
double free_term(const FieldConfig& cfg);

/// Boundary part at distance x1 (m > 0). The Dirichlet marker routes to plane_term_dn.
double plane_term(const FieldConfig& cfg, const ReflectingBC& bc, double x1);

/// +1 Neumann, -1 Dirichlet closed form.
double plane_term_dn(const FieldConfig& cfg, double x1, int sign);

/// Brute-force nested (tau, w) quadrature of the heat-kernel representation at u = 0.
double plane_term_oracle(const FieldConfig& cfg, const ReflectingBC& bc, double x1);

/// Analytically continued zeta-regularized polarization at real u (m > 0).
double regularized_polarization(const FieldConfig& cfg, const ReflectingBC& bc, double x1, double u);

/// The tau-integral representation itself, valid for u > d - 1 (nested quadrature).
double regularized_polarization_oracle(const FieldConfig& cfg, const ReflectingBC& bc, double x1,
                                       double u);

LaurentFit laurent_fit(const FieldConfig& cfg, const ReflectingBC& bc, double x1, double eps = 1e-3);

/// free_term + plane_term, cross-checked against the continued formula at u = 0
/// (Laurent fit for odd d). Throws NumericalFailure if they disagree by more than 1e-6.
PolarizationValue renormalize_at_zero(const FieldConfig& cfg, const ReflectingBC& bc, double x1);

/// Massive: free + plane with warnings. Massless: massless_value.
PolarizationValue evaluate(const FieldConfig& cfg, const ReflectingBC& bc, double x1);

double small_x_asymptotic(const FieldConfig& cfg, const ReflectingBC& bc, double x1);
double large_x_asymptotic(const FieldConfig& cfg, const ReflectingBC& bc, double x1);

/// Zero-mass limit of free + plane (cfg.m must be 0).
PolarizationValue massless_value(const FieldConfig& cfg, const ReflectingBC& bc, double x1);

}  // namespace vacpol::reflecting
