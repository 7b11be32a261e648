#pragma once

#include <complex>

#include "vacpol/quadrature.hpp"
#include "vacpol/types.hpp"

// Reduced heat kernels exp(-tau A_1)(x, y) of the one-dimensional operator
// -d^2/dx^2 + m^2 with a point interaction at x = 0.
namespace vacpol::heat {

/// Robin half-line kernel (x, y > 0, boundary condition -psi'(0) + b psi(0) = 0):
///   e^{-m^2 tau} [G(x-y) + G(x+y) - b e^{-(x+y)^2/4tau} erfcx(b sqrt(tau) + (x+y)/(2 sqrt(tau)))]
/// with G the free Gaussian. Any finite b is accepted here (b < 0 carries a
/// bound state); the positivity requirement b > -m lives in reflecting_kernel.
double robin_half_line_kernel(double tau, double x, double y, double b, double m);

/// Same kernel written with the w-integral  -2b int_0^inf e^{-b w} G(w + x + y) dw,
/// evaluated by quadrature. Secondary oracle for the erf form.
double robin_kernel_integral_form(double tau, double x, double y, double b, double m);

/// Dirichlet half-line kernel G(x-y) - G(x+y), times e^{-m^2 tau}.
double dirichlet_half_line_kernel(double tau, double x, double y, double m);

/// Eigenfunction expansion of the Robin kernel, k-integral truncated at 10/sqrt(tau);
/// the truncation bound is added to the returned error. Needs tau >= 1e-3.
quad::QuadResult spectral_oracle_robin(double tau, double x, double y, double b, double m);

/// Kernel on the punctured line for a reflecting wall. Zero across the wall.
double reflecting_kernel(double tau, double x, double y, const ReflectingBC& bc, double m);

/// Kernel for the semitransparent family; Hermitian in (x, y).
std::complex<double> semitransparent_kernel(double tau, double x, double y,
                                            const SemitransparentBC& bc, double m);

/// int_0^inf exp(-c w - (w + s)^2 / 4 tau) dw in closed form, any real c, s >= 0.
double gaussian_exponential_integral(double c, double s, double tau);

}  // namespace vacpol::heat
