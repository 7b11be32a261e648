#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "vacpol/couplings.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/semitransparent.hpp"
#include "vacpol/specialfns.hpp"

using namespace vacpol;
namespace S = vacpol::semitransparent;

namespace {
constexpr double kPi = std::numbers::pi;
SemitransparentBC delta(double g) { return {{1, 0}, 1, 0, g, 1}; }
SemitransparentBC delta_prime(double beta) { return {{1, 0}, 1, beta, 0, 1}; }
SemitransparentBC general_beta() {
    return {std::polar(1.0, 0.4), 1.3, 0.6, (1.3 * 0.9 - 1) / 0.6, 0.9};
}
SemitransparentBC general_delta() { return {std::polar(1.0, -1.1), 2.0, 0.0, 1.5, 0.5}; }
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("boundary condition validation") {
    CHECK_NOTHROW(validate(general_beta()));
    CHECK_THROWS_AS(validate(SemitransparentBC{{1, 0}, 1, 0, 0, 2}), ParameterError);
    CHECK_THROWS_AS(validate(SemitransparentBC{{2, 0}, 1, 0, 0, 1}), ParameterError);
    CHECK_THROWS_AS(couplings::delta_rate(SemitransparentBC{{1, 0}, 1, 0, 0, -1}), ParameterError);
}

TEST_CASE("coupling constants") {
    const auto r = couplings::lambdas(delta_prime(1.0));
    CHECK(r.plus == doctest::Approx(2.0));
    CHECK(r.minus == doctest::Approx(0.0));
    const auto g = couplings::lambdas(general_beta());
    CHECK(g.plus > g.minus);
    CHECK(couplings::L(delta(3.0), 0.5, 0.5).real() == 0.0);
    // pure delta-prime residues at x either side
    for (double x : {0.4, -0.4}) {
        CHECK(couplings::M_plus(delta_prime(1.0), x, x).real() == doctest::Approx(-2.0));
        CHECK(std::abs(couplings::M_minus(delta_prime(1.0), x, x)) < 1e-15);
    }
    // 1 + M+/L+ - M-/L- is the zero-energy reflection factor, -1 for gamma != 0
    for (const auto& bc : {general_beta(), SemitransparentBC{{1, 0}, 2.0, -0.5, -1.0, 0.75}})
        for (double x : {0.7, -0.7}) {
            const auto l = couplings::lambdas(bc);
            const double id = 1 + couplings::M_plus(bc, x, x).real() / l.plus -
                              couplings::M_minus(bc, x, x).real() / l.minus;
            CHECK(id == doctest::Approx(-1.0).epsilon(1e-12));
        }
}

TEST_CASE("diagonal coefficients") {
    CHECK(S::diagonal_coefficients(delta(2.0), 0.3).L == 0.0);
    const auto d = S::diagonal_coefficients(general_delta(), -0.3);
    CHECK_FALSE(d.beta_branch);
    CHECK(d.L == doctest::Approx(-1.5 / 2.5));
    CHECK(S::diagonal_coefficients(general_beta(), 0.3).beta_branch);
}

TEST_CASE("free wall is invisible") {
    SemitransparentBC free_bc{};
    for (int d : {1, 2, 3}) {
        CHECK(S::plane_term({d, 1, 1}, free_bc, 0.4) == 0.0);
        CHECK(std::abs(S::plane_term_oracle({d, 1, 1}, free_bc, 0.4)) < 1e-10);
        CHECK(S::large_x_asymptotic({d, 1, 1}, free_bc, 3.0) == 0.0);
    }
}

TEST_CASE("plane term against the tau oracle") {
    const SemitransparentBC bcs[] = {delta(2.0), delta(-1.0), general_delta(), delta_prime(1.0),
                                     delta_prime(3.0), general_beta()};
    for (const auto& bc : bcs)
        for (int d : {1, 2, 3})
            for (double x : {0.5, -1.2}) {
                const FieldConfig cfg{d, 1, 1};
                const double a = S::plane_term(cfg, bc, x), o = S::plane_term_oracle(cfg, bc, x);
                CAPTURE(d);
                CAPTURE(x);
                CHECK(std::abs(a - o) <= 1e-8 * std::abs(o));
            }
}

TEST_CASE("omega drops out of the diagonal") {
    auto bc = general_beta();
    const double ref = S::plane_term({2, 1, 1}, bc, 0.6);
    bc.omega = std::polar(1.0, 2.9);
    CHECK(S::plane_term({2, 1, 1}, bc, 0.6) == ref);
}

TEST_CASE("parity when alpha = sigma") {
    for (const auto& bc : {delta(1.0), delta_prime(0.8)})
        CHECK(S::plane_term({3, 1, 1}, bc, 0.7) == doctest::Approx(S::plane_term({3, 1, 1}, bc, -0.7)).epsilon(1e-14));
}

TEST_CASE("Laurent expansion") {
    for (const auto& bc : {delta(2.0), general_beta()}) {
        const auto f = S::laurent_fit({1, 1, 1}, bc, 0.5);
        CHECK(std::abs(f.c_minus1 - 1 / (2 * kPi)) < 1e-6);
        CHECK(std::abs(f.c0 - (S::free_term({1, 1, 1}) + S::plane_term({1, 1, 1}, bc, 0.5))) < 1e-6);
        CHECK(std::abs(S::laurent_fit({2, 1, 1}, bc, 0.5).c_minus1) < 1e-8);
    }
}

TEST_CASE("asymptotics") {
    CHECK(S::small_x_asymptotic({3, 1, 1}, delta(2.0), 1e-3) == 0.0);
    CHECK(S::small_x_asymptotic({2, 1, 1}, general_beta(), 0.01) == doctest::Approx(1 / (8 * kPi * 0.01)));
    const double xs = 1e-3;
    CHECK(rel(S::plane_term({3, 1, 1}, general_beta(), xs), S::small_x_asymptotic({3, 1, 1}, general_beta(), xs)) < 1e-2);
    // ratio -1/2 for pure delta, 1/3 for pure delta-prime at m = 1
    const double base = S::large_x_asymptotic({1, 1, 1}, delta(0.0), 4.0);
    CHECK(base == 0.0);
    const double pref = std::pow(4 * kPi, -0.5) / 2 * std::exp(-8.0) / std::sqrt(4.0);
    CHECK(rel(S::large_x_asymptotic({1, 1, 1}, delta(2.0), 4.0), -0.5 * pref) < 1e-12);
    CHECK(rel(S::large_x_asymptotic({1, 1, 1}, delta_prime(1.0), 4.0), pref / 3.0) < 1e-12);
    for (const auto& bc : {delta(2.0), general_beta()}) {
        const double r = S::plane_term({2, 1, 1}, bc, 60.0) / S::large_x_asymptotic({2, 1, 1}, bc, 60.0);
        CHECK(std::abs(r - 1) < 1e-2);
    }
}

TEST_CASE("pure delta softening and its control") {
    for (int d : {2, 3}) {
        const FieldConfig cfg{d, 1, 1};
        auto scaled = [&](const SemitransparentBC& bc, double x) {
            return std::pow(x, d - 1) * S::plane_term(cfg, bc, x);
        };
        CHECK(std::abs(scaled(delta(2.0), 1e-4)) * 10 <= std::abs(scaled(delta(2.0), 1e-2)));
        const double c3 = scaled(general_delta(), 1e-3), c4 = scaled(general_delta(), 1e-4);
        CHECK(c4 != 0.0);
        CHECK(std::abs(c3 / c4 - 1) < 0.05);
    }
}

TEST_CASE("massless values") {
    const auto v = S::massless_value({1, 0, 1}, delta(2.0), 0.5);
    const double ref = (std::log(1.0) + specialfns::euler_gamma() + std::exp(1.0) * specialfns::expint_e1(1.0)) / (2 * kPi);
    CHECK(v.total == doctest::Approx(ref).epsilon(1e-12));
    CHECK(v.total == doctest::Approx(S::evaluate({1, 1e-8, 1}, delta(2.0), 0.5).total).epsilon(1e-9));
    CHECK(S::massless_value({1, 0, 1}, general_beta(), -0.5).total ==
          doctest::Approx(S::evaluate({1, 1e-8, 1}, general_beta(), -0.5).total).epsilon(1e-8));

    CHECK_THROWS_AS(S::massless_value({1, 0, 1}, delta_prime(1.0), 0.5), InfraredDivergence);
    CHECK_THROWS_AS(S::massless_value({1, 0, 1}, delta(0.0), 0.5), InfraredDivergence);

    for (int d : {2, 3}) {
        for (const auto& bc : {delta(2.0), general_delta(), delta_prime(1.0), general_beta()}) {
            const double a = S::massless_value({d, 0, 1}, bc, 0.8).total;
            const double b = S::evaluate({d, 1e-4, 1}, bc, 0.8).total;
            CHECK(std::abs(a - b) < 1e-3);
        }
    }
    // far from the wall the gamma != 0 family behaves like Dirichlet
    const double far = 300.0;
    const double dir = -std::sqrt(kPi) / (std::pow(4 * kPi, 1.5) * far);
    CHECK(S::massless_value({2, 0, 1}, delta(2.0), far).total == doctest::Approx(dir).epsilon(1e-2));
}

TEST_CASE("spectrum") {
    const auto s = S::spectrum(delta(-1.0), 1.0);
    REQUIRE(s.point_eigenvalues.size() == 1);
    CHECK(s.point_eigenvalues[0] == doctest::Approx(0.75));
    CHECK(s.positive);
    CHECK(S::spectrum(delta(2.0), 1.0).point_eigenvalues.empty());
    const auto p = S::spectrum(delta_prime(1.0), 0.0);
    CHECK(*p.lambda_plus == doctest::Approx(2.0));
    CHECK(*p.lambda_minus == doctest::Approx(0.0));
    CHECK(p.positive);
    CHECK_FALSE(S::spectrum(delta(-3.0), 1.0).positive);
    CHECK_THROWS_AS(S::plane_term({1, 1, 1}, delta(-3.0), 0.5), ParameterError);
}
