#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace vacpol {

/// Space dimension d, mass m, renormalization scale kappa.
struct FieldConfig {
    int d = 1;
    double m = 1.0;
    double kappa = 1.0;
};

/// Throws ParameterError unless 1 <= d <= 11, m >= 0, kappa > 0 (all finite).
void validate(const FieldConfig& cfg);

/// Robin coefficient on one face of the wall; Dirichlet is the point at infinity.
struct RobinCoefficient {
    double value = 0.0;
    bool dirichlet = false;

    static RobinCoefficient finite(double b) { return {b, false}; }
    static RobinCoefficient dirichlet_marker() { return {0.0, true}; }
    bool is_neumann() const { return !dirichlet && value == 0.0; }
};

struct ReflectingBC {
    RobinCoefficient plus;
    RobinCoefficient minus;

    static ReflectingBC symmetric(RobinCoefficient b) { return {b, b}; }
    /// b_+ for x1 > 0, b_- for x1 < 0.
    const RobinCoefficient& side(double x1) const { return x1 > 0.0 ? plus : minus; }
};

/// Boundary condition (psi(0+), psi'(0+)) = omega [[alpha, beta], [gamma, sigma]] (psi(0-), psi'(0-)).
/// `gamma_coupling` is the delta strength, not the Euler constant.
struct SemitransparentBC {
    std::complex<double> omega{1.0, 0.0};
    double alpha = 1.0;
    double beta = 0.0;
    double gamma_coupling = 0.0;
    double sigma = 1.0;
};

/// |omega| = 1 and alpha*sigma - beta*gamma = 1, both within 1e-12.
void validate(const SemitransparentBC& bc);

struct SpectrumReport {
    double continuous_threshold = 0.0;
    std::optional<double> lambda_plus;
    std::optional<double> lambda_minus;
    std::vector<double> point_eigenvalues;
    bool positive = true;
};

struct PolarizationValue {
    double free_term = 0.0;
    double plane_term = 0.0;
    double total = 0.0;
    std::string branch;
    std::vector<std::string> warnings;
};

struct DiagonalCoefficients {
    bool beta_branch = false;  // true: M_plus/M_minus meaningful; false: L meaningful
    double L = 0.0;
    double M_plus = 0.0;
    double M_minus = 0.0;
};

/// F(u) ~ c_minus1/u + c0 + c1 u, fitted on u = +-eps, +-2eps.
struct LaurentFit {
    double c_minus1 = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double residual = 0.0;  // rms misfit relative to max |F(u_i)|
};

}  // namespace vacpol
