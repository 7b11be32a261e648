#pragma once

// Special functions used by the heat-kernel and polarization formulas.
//
// Accuracy targets (relative unless stated otherwise):
//   frak_k            1e-12 for w in [1e-6, 50], nu in [0, 10]
//   upper_inc_gamma   1e-10 for a in [-10, 2]; 1e-8 for a in [-20, -10)
//   erf               1e-14 absolute
//
// Everything here is a pure function of its arguments.

namespace vacpol::specialfns {

inline constexpr double kEulerGamma = 0.57721566490153286061;

constexpr double euler_gamma() noexcept { return kEulerGamma; }

/// H_l = 1 + 1/2 + ... + 1/l, with H_0 = 0.
double harmonic(int ell);

/// 1/Gamma(x); entire, so it returns 0 at the non-positive integers.
double rgamma(double x);

/// Modified Bessel function of the second kind K_nu(w), real order, w > 0.
double bessel_k(double nu, double w);

/// The rescaled Macdonald function w^nu K_nu(w). Finite at w -> 0+ for nu > 0.
///
/// Half-integer orders use the terminating elementary expansion. All other
/// orders go through Temme's series (w <= 2) or Steed's continued fraction
/// (w > 2) for the reduced order in [-1/2, 1/2], followed by the upward
/// recurrence  frak_{nu+1} = w^2 frak_{nu-1} + 2 nu frak_nu,  which is free of
/// the w^{-nu} overflow that plagues K_nu itself at small w.
/// Returns 0 (see frak_k_underflows) once e^{-w} leaves the double range.
double frak_k(double nu, double w);

/// e^w w^nu K_nu(w); never underflows.
double frak_k_scaled(double nu, double w);

/// True when frak_k(nu, w) is flushed to zero by the e^{-w} factor.
bool frak_k_underflows(double nu, double w);

/// Gamma(a, z) = int_z^inf t^{a-1} e^{-t} dt for real a and z > 0.
double upper_inc_gamma(double a, double z);

/// e^z z^{-a} Gamma(a, z). For a < 0 this stays finite as z -> 0+ (limit -1/a),
/// and for a = 0 it is e^z E_1(z). Accepts z = 0 when a < 0.
double upper_inc_gamma_scaled(double a, double z);

/// E_1(z) = Gamma(0, z).
double expint_e1(double z);

double erf(double z);
double erfc(double z);

/// e^{z^2} erfc(z); well behaved for large positive z.
double erfcx(double z);

}  // namespace vacpol::specialfns
