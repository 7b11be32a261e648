#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vacpol/types.hpp"

namespace vacpol::detail {

/// e^{w0} int_0^inf e^{-rate v} (v+1)^p frak_nu(w0 (v+1)) dv.
/// Needs rate + w0 > 0; the e^{-w0} factor is left out so large |x1| cannot underflow.
double scaled_frak_integral(double rate, double p, double nu, double w0);

/// 1 / (2^{(3d-1)/2} pi^{(d+1)/2} |x|^{d-1})
double plane_prefactor(int d, double x);

/// Gamma((d-1)/2) / ((4 pi)^{(d+1)/2} |x|^{d-1}), d >= 2.
double wall_coefficient(int d, double x);

/// Free-theory term; m = 0 gives 0 for d >= 2 and throws InfraredDivergence for d = 1.
double free_term(const FieldConfig& cfg);

/// Leading small-|x| term of a Neumann-type plane contribution.
double small_x_leading(const FieldConfig& cfg, double x);

/// m^{(d-2)/2} / (2 (4 pi)^{d/2}) e^{-2 m |x|} / |x|^{d/2}
double large_x_envelope(const FieldConfig& cfg, double x);

/// First term of the continued formula: m^{d-1} (kappa/m)^u Gamma((u-d+1)/2) / (2^{d+1} pi^{d/2} Gamma((u+1)/2)).
/// Throws PoleError when (u-d+1)/2 is within 1e-12 of a non-positive integer.
double continued_free_part(const FieldConfig& cfg, double u);

/// 2^{(u-3d+1)/2} (kappa |x|)^u / (pi^{d/2} Gamma((u+1)/2) |x|^{d-1})
double continued_prefactor(const FieldConfig& cfg, double x, double u);

/// int_0^inf exp(-c w - (w + s)^2 / 4 tau) dw by quadrature (oracle use only).
double gaussian_exponential_quad(double c, double s, double tau);

/// kappa^u / (2 (4 pi)^{d/2} Gamma((u+1)/2)) int_0^inf tau^{(u-d-1)/2} e^{-m^2 tau} [one + bracket(tau)] dtau
/// with one = 1 or 0, by quadrature in sigma = sqrt(tau).
double tau_representation(const FieldConfig& cfg, double x, double u, bool include_one,
                          const std::function<double(double)>& bracket);

/// Least squares of c_{-1}/u + c0 + c1 u through F(+-eps), F(+-2 eps).
LaurentFit fit_laurent(const std::function<double(double)>& F, double eps);

/// Compare the fit (odd d) or the direct value (even d) with the closed forms; throws NumericalFailure.
void check_renormalization(const FieldConfig& cfg, const std::function<double(double)>& F,
                           double closed_total);

std::string fmt(double v);

}  // namespace vacpol::detail
