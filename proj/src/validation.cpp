#include "vacpol/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "vacpol/couplings.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/heatkernel.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/reflecting.hpp"
#include "vacpol/semitransparent.hpp"
#include "vacpol/specialfns.hpp"

namespace vacpol::validation {
namespace {

using std::numbers::pi;
namespace sf = specialfns;

struct Runner {
    std::string suite;
    double scale;
    std::vector<Check>* out;

    // body returns the worst deviation; exceptions count as failures
    void add(const std::string& name, double tol, const std::function<double()>& body,
             const std::string& note = {}) {
        Check c{suite, name, 0.0, tol * scale, false, note};
        try {
            c.measured = body();
            c.pass = std::isfinite(c.measured) && c.measured <= c.tolerance;
        } catch (const std::exception& e) {
            c.measured = std::nan("");
            c.note = e.what();
        }
        out->push_back(std::move(c));
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, double(i) / (n - 1));
    return v;
}

// value and derivative at 0+ from samples f(h), f(2h), f(3h) (quadratic extrapolation)
struct Edge {
    std::complex<double> value, slope;
};

Edge edge(const std::function<std::complex<double>(double)>& f, double h, double dir) {
    const auto f1 = f(dir * h), f2 = f(2.0 * dir * h), f3 = f(3.0 * dir * h);
    return {3.0 * f1 - 3.0 * f2 + f3, dir * (-5.0 * f1 + 8.0 * f2 - 3.0 * f3) / (2.0 * h)};
}

SemitransparentBC delta_prime_bc(double beta) { return {{1.0, 0.0}, 1.0, beta, 0.0, 1.0}; }
SemitransparentBC delta_bc(double g) { return {{1.0, 0.0}, 1.0, 0.0, g, 1.0}; }

// alpha sigma - beta gamma = 1 with everything generic
SemitransparentBC generic_beta_bc() {
    const double a = 1.3, b = 0.6, s = 0.9;
    return {std::polar(1.0, 0.4), a, b, (a * s - 1.0) / b, s};
}

SemitransparentBC generic_delta_bc() { return {std::polar(1.0, -1.1), 2.0, 0.0, 1.5, 0.5}; }

void specialfns_suite(Runner& r) {
    r.add("frak_half_exact", 1e-12, [] {
        double worst = 0.0;
        for (double w : logspace(0.01, 50.0, 200))
            worst = std::max(worst, rel(sf::frak_k_scaled(0.5, w), std::sqrt(pi / 2.0)));
        return worst;
    });
    r.add("frak_recurrence", 1e-11, [] {
        double worst = 0.0;
        for (double nu : {0.3, 1.0, 2.7, 5.0})
            for (double w : {0.05, 0.5, 3.0, 20.0}) {
                const double lhs = sf::frak_k_scaled(nu + 1.0, w);
                const double rhs = w * w * sf::frak_k_scaled(nu - 1.0, w) + 2.0 * nu * sf::frak_k_scaled(nu, w);
                worst = std::max(worst, rel(lhs, rhs));
            }
        return worst;
    });
    r.add("bessel_k_vs_std", 1e-11, [] {
        double worst = 0.0;
        for (double nu : {0.0, 0.25, 1.0, 3.5, 7.0})
            for (double w : {1e-3, 0.1, 1.0, 10.0, 40.0})
                worst = std::max(worst, rel(sf::bessel_k(nu, w), std::cyl_bessel_k(nu, w)));
        return worst;
    });
    r.add("frak0_small_w", 1e-9, [] {
        const double w = 1e-6;
        return rel(sf::frak_k(0.0, w), -std::log(w / 2.0) - sf::euler_gamma());
    });
    r.add("inc_gamma_recurrence", 1e-10, [] {
        // z G_{a+1} = a G_a + 1 for G_a = e^z z^{-a} Gamma(a, z)
        double worst = 0.0;
        for (double a : {-9.5, -3.0, -1.0, -0.5, 0.0, 0.5, 1.7})
            for (double z : {0.01, 0.3, 1.0, 4.0, 20.0}) {
                const double g1 = sf::upper_inc_gamma_scaled(a + 1.0, z);
                const double g0 = sf::upper_inc_gamma_scaled(a, z);
                const double res = std::abs(z * g1 - a * g0 - 1.0);
                worst = std::max(worst, res / (std::abs(z * g1) + std::abs(a * g0) + 1.0));
            }
        return worst;
    });
    r.add("expint_e1_reference", 1e-13, [] { return rel(sf::expint_e1(1.0), 0.21938393439552029); });
    r.add("erf_odd", 1e-14, [] {
        double worst = 0.0;
        for (double z = -6.0; z <= 6.0; z += 0.37) worst = std::max(worst, std::abs(sf::erf(z) + sf::erf(-z)));
        return worst;
    });
    r.add("erf_reference", 1e-12, [] { return std::abs(sf::erf(1.0) - 0.84270079294971487); });
    r.add("erf_plus_erfc", 1e-14, [] {
        double worst = 0.0;
        for (double z = -4.0; z <= 4.0; z += 0.21)
            worst = std::max(worst, std::abs(sf::erf(z) + sf::erfc(z) - 1.0));
        return worst;
    });
    r.add("erfcx_vs_erfc", 1e-12, [] {
        double worst = 0.0;
        for (double z = -2.0; z <= 5.0; z += 0.13)
            worst = std::max(worst, rel(sf::erfcx(z), std::exp(z * z) * std::erfc(z)));
        return worst;
    });
    r.add("quadrature_endpoint_singularities", 1e-10, [] {
        const double a = quad::integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0).value;
        const double b = quad::integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value;
        const double c = quad::integrate_semi_infinite([](double x) { return std::exp(-x); }).value;
        return std::max({rel(a, -1.0), rel(b, 2.0), rel(c, 1.0)});
    });
}

double semigroup_error(const std::function<std::complex<double>(double, double, double)>& K,
                       double t1, double t2, double x, double y, bool across) {
    const double scale = std::sqrt(t1 + t2);
    const quad::QuadSpec spec{1e-14, 1e-11, 4000};
    auto piece = [&](double sign, bool imag) {
        auto f = [&](double z) {
            const std::complex<double> v = K(t1, x, sign * z) * K(t2, sign * z, y);
            return imag ? v.imag() : v.real();
        };
        return quad::integrate_semi_infinite(f, spec, scale).value;
    };
    const double own = x > 0.0 ? 1.0 : -1.0;
    std::complex<double> total{piece(own, false), piece(own, true)};
    if (across) total += std::complex<double>{piece(-own, false), piece(-own, true)};
    const std::complex<double> direct = K(t1 + t2, x, y);
    return std::abs(total - direct) / std::abs(direct);
}

void heatkernel_suite(Runner& r) {
    r.add("spectral_vs_closed_form", 1e-7, [] {
        double worst = 0.0;
        const double pts[][4] = {{0.1, 0.3, 0.5, 1.0}, {1.0, 1.0, 0.5, -1.0}, {2.0, 0.2, 2.0, 0.0},
                                 {0.5, 1.5, 0.7, 5.0}, {0.05, 0.1, 0.2, -0.5}};
        for (const auto& p : pts) {
            const auto s = heat::spectral_oracle_robin(p[0], p[1], p[2], p[3], 0.0);
            const double c = heat::robin_half_line_kernel(p[0], p[1], p[2], p[3], 0.0);
            worst = std::max(worst, std::abs(s.value - c) / std::abs(c));
        }
        return worst;
    });
    r.add("integral_form_vs_closed_form", 1e-9, [] {
        double worst = 0.0;
        for (double b : {-0.8, 0.3, 4.0})
            for (double tau : {0.05, 1.0, 6.0})
                worst = std::max(worst, rel(heat::robin_kernel_integral_form(tau, 0.4, 0.9, b, 1.0),
                                            heat::robin_half_line_kernel(tau, 0.4, 0.9, b, 1.0)));
        return worst;
    });
    r.add("semigroup_robin", 1e-6, [] {
        const ReflectingBC bc{RobinCoefficient::finite(0.7), RobinCoefficient::dirichlet_marker()};
        auto K = [&](double t, double x, double y) -> std::complex<double> {
            return heat::reflecting_kernel(t, x, y, bc, 0.5);
        };
        return std::max(semigroup_error(K, 0.3, 0.5, 0.4, 1.1, false),
                        semigroup_error(K, 0.2, 0.9, -0.6, -0.3, false));
    });
    r.add("semigroup_semitransparent", 1e-6, [] {
        double worst = 0.0;
        for (const SemitransparentBC& bc : {generic_beta_bc(), generic_delta_bc()}) {
            auto K = [&](double t, double x, double y) { return heat::semitransparent_kernel(t, x, y, bc, 0.5); };
            worst = std::max(worst, semigroup_error(K, 0.3, 0.4, 0.5, -0.8, true));
        }
        return worst;
    });
    r.add("heat_equation_residual", 1e-5, [] {
        const SemitransparentBC bc = generic_beta_bc();
        const double m = 0.7, h = 1e-4;
        double worst = 0.0;
        for (double x : {0.3, -0.9}) {
            auto K = [&](double t, double xx) { return heat::semitransparent_kernel(t, xx, 0.6, bc, m); };
            const double t = 0.4;
            const auto dt = (K(t + h, x) - K(t - h, x)) / (2.0 * h);
            const auto dxx = (K(t, x + h) - 2.0 * K(t, x) + K(t, x - h)) / (h * h);
            worst = std::max(worst, std::abs(dt - dxx + m * m * K(t, x)) / std::abs(dt));
        }
        return worst;
    });
    r.add("robin_boundary_residual", 1e-6, [] {
        double worst = 0.0;
        for (double b : {-0.5, 0.0, 0.8, 3.0}) {
            const ReflectingBC bc = ReflectingBC::symmetric(RobinCoefficient::finite(b));
            for (double dir : {1.0, -1.0}) {
                auto f = [&](double x) -> std::complex<double> {
                    return heat::reflecting_kernel(0.5, x, dir * 0.7, bc, 1.0);
                };
                const Edge e = edge(f, 1e-4, dir);
                // -d/d|x| psi + b psi = 0 on either face
                worst = std::max(worst, std::abs(-dir * e.slope + b * e.value));
            }
        }
        return worst;
    });
    r.add("neumann_conservation", 1e-8, [] {
        double worst = 0.0;
        for (double tau : {0.1, 1.0, 5.0}) {
            auto f = [&](double y) { return heat::robin_half_line_kernel(tau, 0.8, y, 0.0, 0.0); };
            const double total = quad::integrate_semi_infinite(f, {1e-14, 1e-12, 4000}, std::sqrt(tau)).value;
            worst = std::max(worst, std::abs(total - 1.0));
        }
        return worst;
    });
    r.add("jump_conditions", 1e-5, [] {
        double worst = 0.0;
        for (const SemitransparentBC& bc : {generic_beta_bc(), generic_delta_bc(), delta_bc(2.0)}) {
            auto f = [&](double x) { return heat::semitransparent_kernel(0.6, x, 0.5, bc, 0.4); };
            const Edge p = edge(f, 1e-4, 1.0);
            const Edge n = edge(f, 1e-4, -1.0);
            const auto v = bc.omega * (bc.alpha * n.value + bc.beta * n.slope);
            const auto s = bc.omega * (bc.gamma_coupling * n.value + bc.sigma * n.slope);
            const double scale = std::abs(p.value) + std::abs(p.slope);
            worst = std::max({worst, std::abs(p.value - v) / scale, std::abs(p.slope - s) / scale});
        }
        return worst;
    });
    r.add("hermiticity", 1e-13, [] {
        double worst = 0.0;
        for (const SemitransparentBC& bc : {generic_beta_bc(), generic_delta_bc()})
            for (double x : {-1.2, 0.4})
                for (double y : {-0.3, 0.9}) {
                    const auto a = heat::semitransparent_kernel(0.7, x, y, bc, 0.3);
                    const auto b = heat::semitransparent_kernel(0.7, y, x, bc, 0.3);
                    worst = std::max(worst, std::abs(a - std::conj(b)) / std::abs(a));
                }
        return worst;
    });
}

void reflecting_suite(Runner& r) {
    r.add("oracle_equivalence", 1e-8, [] {
        double worst = 0.0;
        const RobinCoefficient bs[] = {RobinCoefficient::finite(-0.2), RobinCoefficient::finite(0.0),
                                       RobinCoefficient::finite(1.0), RobinCoefficient::dirichlet_marker()};
        for (int d : {1, 3})
            for (const auto& b : bs) {
                const FieldConfig cfg{d, 1.0, 1.0};
                const auto bc = ReflectingBC::symmetric(b);
                worst = std::max(worst, rel(reflecting::plane_term(cfg, bc, 0.5),
                                            reflecting::plane_term_oracle(cfg, bc, 0.5)));
            }
        return worst;
    });
    r.add("continuation_matches_tau_integral", 1e-9, [] {
        const FieldConfig cfg{2, 1.0, 1.3};
        const auto bc = ReflectingBC::symmetric(RobinCoefficient::finite(0.6));
        return rel(reflecting::regularized_polarization(cfg, bc, 0.7, 2.5),
                   reflecting::regularized_polarization_oracle(cfg, bc, 0.7, 2.5));
    });
    r.add("laurent_residue_d1", 1e-6, [] {
        double worst = 0.0;
        for (double b : {0.0, 2.0}) {
            const auto fit = reflecting::laurent_fit({1, 1.0, 1.0}, ReflectingBC::symmetric(RobinCoefficient::finite(b)), 0.8);
            worst = std::max(worst, std::abs(fit.c_minus1 - 1.0 / (2.0 * pi)));
        }
        return worst;
    });
    r.add("laurent_c0_matches_total", 1e-6, [] {
        double worst = 0.0;
        const auto bc = ReflectingBC::symmetric(RobinCoefficient::finite(0.5));
        for (int d : {1, 2, 3}) {
            const FieldConfig cfg{d, 1.0, 1.0};
            const auto fit = reflecting::laurent_fit(cfg, bc, 0.6);
            const auto v = reflecting::evaluate(cfg, bc, 0.6);
            worst = std::max(worst, std::abs(fit.c0 - v.total) / std::max(1.0, std::abs(v.total)));
        }
        return worst;
    });
    r.add("parity", 0.0, [] {
        const auto bc = ReflectingBC::symmetric(RobinCoefficient::finite(0.3));
        const FieldConfig cfg{3, 1.0, 1.0};
        return std::abs(reflecting::plane_term(cfg, bc, 0.9) - reflecting::plane_term(cfg, bc, -0.9));
    });
    r.add("dirichlet_robin_neumann_sandwich", 0.0, [] {
        // violation measured as how far the ordering is broken
        double worst = 0.0;
        const FieldConfig cfg{2, 1.0, 1.0};
        for (double x : {0.2, 1.0, 3.0}) {
            const double dn = reflecting::plane_term_dn(cfg, x, -1);
            const double nn = reflecting::plane_term_dn(cfg, x, 1);
            double prev = nn;
            for (double b : {0.1, 1.0, 10.0}) {
                const double v = reflecting::plane_term(cfg, ReflectingBC::symmetric(RobinCoefficient::finite(b)), x);
                worst = std::max({worst, v - prev, dn - v});
                prev = v;
            }
        }
        return std::max(worst, 0.0);
    });
    r.add("dirichlet_limit", 1e-5, [] {
        const FieldConfig cfg{3, 1.0, 1.0};
        return rel(reflecting::plane_term(cfg, ReflectingBC::symmetric(RobinCoefficient::finite(1e6)), 0.5),
                   reflecting::plane_term_dn(cfg, 0.5, -1));
    });
    r.add("small_x_ratio", 1e-2, [] {
        const FieldConfig cfg{3, 1.0, 1.0};
        const auto bc = ReflectingBC::symmetric(RobinCoefficient::finite(0.1));
        return std::abs(reflecting::plane_term(cfg, bc, 1e-3) / reflecting::small_x_asymptotic(cfg, bc, 1e-3) - 1.0);
    });
    r.add("large_x_ratio", 1e-2, [] {
        // corrections are O(1/(m|x|)) with a b-dependent coefficient
        const FieldConfig cfg{1, 1.0, 1.0};
        const auto bc = ReflectingBC::symmetric(RobinCoefficient::finite(0.5));
        return std::abs(reflecting::plane_term(cfg, bc, 60.0) / reflecting::large_x_asymptotic(cfg, bc, 60.0) - 1.0);
    });
    r.add("massless_limit", 1e-3, [] {
        const auto bc = ReflectingBC::symmetric(RobinCoefficient::finite(1.0));
        const auto a = reflecting::evaluate({3, 1e-4, 1.0}, bc, 0.5);
        const auto b = reflecting::massless_value({3, 0.0, 1.0}, bc, 0.5);
        return std::abs(a.total - b.total);
    });
    r.add("massless_d1_matches_limit", 1e-9, [] {
        double worst = 0.0;
        for (const auto& b : {RobinCoefficient::dirichlet_marker(), RobinCoefficient::finite(0.7)}) {
            const auto bc = ReflectingBC::symmetric(b);
            worst = std::max(worst, std::abs(reflecting::massless_value({1, 0.0, 1.0}, bc, 0.5).total -
                                             reflecting::evaluate({1, 1e-8, 1.0}, bc, 0.5).total));
        }
        return worst;
    });
}

void semitransparent_suite(Runner& r) {
    r.add("zero_energy_reflection", 1e-12, [] {
        double worst = 0.0;
        for (const SemitransparentBC& bc : {generic_beta_bc(), delta_prime_bc(0.7), delta_prime_bc(-1.5)})
            for (double x : {0.5, -0.5}) {
                const auto lam = couplings::lambdas(bc);
                const auto v = 1.0 + couplings::M_plus(bc, x, x) / lam.plus - couplings::M_minus(bc, x, x) / lam.minus;
                worst = std::max(worst, std::abs(v + 1.0));
            }
        return worst;
    });
    r.add("omega_independence", 0.0, [] {
        const FieldConfig cfg{2, 1.0, 1.0};
        SemitransparentBC a = generic_beta_bc();
        SemitransparentBC b = a;
        b.omega = std::polar(1.0, 2.9);
        return std::abs(semitransparent::plane_term(cfg, a, 0.8) - semitransparent::plane_term(cfg, b, 0.8));
    });
    r.add("oracle_equivalence", 1e-8, [] {
        double worst = 0.0;
        worst = std::max(worst, rel(semitransparent::plane_term({1, 1.0, 1.0}, delta_bc(1.0), 0.5),
                                    semitransparent::plane_term_oracle({1, 1.0, 1.0}, delta_bc(1.0), 0.5)));
        worst = std::max(worst, rel(semitransparent::plane_term({2, 1.0, 1.0}, delta_prime_bc(0.8), -0.7),
                                    semitransparent::plane_term_oracle({2, 1.0, 1.0}, delta_prime_bc(0.8), -0.7)));
        worst = std::max(worst, rel(semitransparent::plane_term({3, 2.0, 1.0}, generic_beta_bc(), 0.3),
                                    semitransparent::plane_term_oracle({3, 2.0, 1.0}, generic_beta_bc(), 0.3)));
        return worst;
    });
    r.add("free_case_vanishes", 0.0, [] {
        return std::abs(semitransparent::plane_term({3, 1.0, 1.0}, delta_bc(0.0), 0.4));
    });
    r.add("laurent_residue_d1", 1e-6, [] {
        const auto fit = semitransparent::laurent_fit({1, 1.0, 1.0}, generic_beta_bc(), 0.5);
        return std::abs(fit.c_minus1 - 1.0 / (2.0 * pi));
    });
    r.add("pure_delta_softening", 1.0, [] {
        // |x|^{d-1} plane must drop by at least 10x from 1e-2 to 1e-4: report (late/early)*10
        const FieldConfig cfg{3, 1.0, 1.0};
        const double early = 1e-4 * semitransparent::plane_term(cfg, delta_bc(1.0), 1e-2);
        const double late = 1e-8 * semitransparent::plane_term(cfg, delta_bc(1.0), 1e-4);
        return 10.0 * std::abs(late / early);
    });
    r.add("massless_limit", 1e-3, [] {
        const auto bc = delta_prime_bc(1.0);
        const auto a = semitransparent::evaluate({3, 1e-4, 1.0}, bc, 0.5);
        const auto b = semitransparent::massless_value({3, 0.0, 1.0}, bc, 0.5);
        return std::abs(a.total - b.total);
    });
    r.add("massless_d1_limit", 1e-9, [] {
        const auto bc = generic_beta_bc();
        const auto a = semitransparent::evaluate({1, 1e-8, 1.0}, bc, 0.5);
        const auto b = semitransparent::massless_value({1, 0.0, 1.0}, bc, 0.5);
        return std::abs(a.total - b.total);
    });
    r.add("large_x_ratio", 1e-2, [] {
        const FieldConfig cfg{1, 1.0, 1.0};
        const auto bc = generic_beta_bc();
        return std::abs(semitransparent::plane_term(cfg, bc, 60.0) /
                            semitransparent::large_x_asymptotic(cfg, bc, 60.0) - 1.0);
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"specialfns", "heatkernel", "reflecting", "semitransparent"};
    return names;
}

std::vector<Check> run(const std::string& suite, double tol_scale) {
    if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
        throw ParameterError("tolerance scale must be positive");
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw ParameterError("unknown suite '" + suite + "'");
    std::vector<Check> out;
    for (const auto& name : names) {
        if (suite != "all" && suite != name) continue;
        Runner r{name, tol_scale, &out};
        if (name == "specialfns") specialfns_suite(r);
        else if (name == "heatkernel") heatkernel_suite(r);
        else if (name == "reflecting") reflecting_suite(r);
        else semitransparent_suite(r);
    }
    return out;
}

}  // namespace vacpol::validation
