#pragma once

#include <functional>

namespace vacpol::quad {

struct QuadSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. Integrable endpoint
/// singularities (log, x^{-1/2}) are handled by bisection alone.
/// Throws NumericalFailure (estimate + error attached) if the interval budget
/// runs out before err <= max(abs_tol, rel_tol*|value|).
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadSpec& spec = {});

/// Integral of f over (0, inf) through v = scale * t/(1-t), t in (0, 1).
/// Pick scale near the decay length of f; the result does not depend on it
/// beyond the tolerance.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadSpec& spec = {},
                                   double scale = 1.0);

}  // namespace vacpol::quad
