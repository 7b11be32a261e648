// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: vacpol_acceptance [criterion ...]   (no arguments: all of them)
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "vacpol/cli.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/heatkernel.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/reflecting.hpp"
#include "vacpol/semitransparent.hpp"
#include "vacpol/specialfns.hpp"

using namespace vacpol;
namespace R = vacpol::reflecting;
namespace S = vacpol::semitransparent;
namespace sf = vacpol::specialfns;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ReflectingBC robin(double b) { return ReflectingBC::symmetric(RobinCoefficient::finite(b)); }
ReflectingBC dirichlet() { return ReflectingBC::symmetric(RobinCoefficient::dirichlet_marker()); }
SemitransparentBC delta(double g) { return {{1, 0}, 1, 0, g, 1}; }
SemitransparentBC delta_prime(double b) { return {{1, 0}, 1, b, 0, 1}; }
SemitransparentBC general_beta() { return {std::polar(1.0, 0.4), 1.3, 0.6, (1.3 * 0.9 - 1) / 0.6, 0.9}; }
SemitransparentBC general_delta() { return {std::polar(1.0, -1.1), 2.0, 0.0, 1.5, 0.5}; }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 1. reflecting oracle grid
Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int n = 0;
    for (int d : {1, 2, 3, 4})
        for (double m : {0.5, 1.0, 2.0})
            for (double b : {-0.4 * m, 0.0, 1.0, 10.0})
                for (double x : {0.1, 0.5, 1.0, 3.0}) {
                    const FieldConfig cfg{d, m, 1.0};
                    worst = std::max(worst, rel(R::plane_term(cfg, robin(b), x), R::plane_term_oracle(cfg, robin(b), x)));
                    ++n;
                }
    const double t = seconds_since(t0);
    o.require(n == 192, "grid size " + std::to_string(n));
    o.require(worst <= 1e-8, "worst rel " + num(worst));
    o.require(t <= 120.0, "runtime " + num(t) + " s");
    o.note(std::to_string(n) + " points, worst rel " + num(worst) + ", " + num(t) + " s");
    return o;
}

// 2. semitransparent oracle grid
Outcome criterion2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int n = 0;
    for (double m : {0.5, 1.0, 2.0}) {
        const std::vector<SemitransparentBC> bcs{
            delta(-0.5 * 2.0 * m), delta(1.0), delta(5.0), general_delta(),
            delta_prime(1.0), delta_prime(2.5), general_beta()};
        for (const auto& bc : bcs)
            for (int d : {1, 2, 3})
                for (double x : {-3.0, -0.5, 0.1, 1.0}) {
                    const FieldConfig cfg{d, m, 1.0};
                    worst = std::max(worst, rel(S::plane_term(cfg, bc, x), S::plane_term_oracle(cfg, bc, x)));
                    ++n;
                }
    }
    const double t = seconds_since(t0);
    o.require(worst <= 1e-8, "worst rel " + num(worst));
    o.require(t <= 180.0, "runtime " + num(t) + " s");
    o.note(std::to_string(n) + " points, worst rel " + num(worst) + ", " + num(t) + " s");
    return o;
}

// 3. heat kernel
Outcome criterion3() {
    Outcome o;
    double worst_spec = 0.0;
    int n = 0;
    for (double tau : {0.2, 1.0})
        for (double b : {-1.0, -0.3, 0.0, 1.0, 5.0})
            for (const auto& xy : {std::pair{0.3, 0.7}, std::pair{1.0, 1.0}}) {
                const double c = heat::robin_half_line_kernel(tau, xy.first, xy.second, b, 0.0);
                const double s = heat::spectral_oracle_robin(tau, xy.first, xy.second, b, 0.0).value;
                worst_spec = std::max(worst_spec, std::abs(c - s) / std::max(1.0, std::abs(c)));
                ++n;
            }
    o.require(n == 20, "points " + std::to_string(n));
    o.require(worst_spec <= 1e-7, "spectral " + num(worst_spec));

    double worst_sg = 0.0;
    for (double b : {0.0, 0.5, 3.0})
        for (const auto& t : {std::pair{0.5, 0.5}, std::pair{0.3, 0.7}}) {
            const double x = 0.4, y = 0.9;
            auto f = [&](double z) {
                return heat::robin_half_line_kernel(t.first, x, z, b, 0.0) *
                       heat::robin_half_line_kernel(t.second, z, y, b, 0.0);
            };
            const double lhs = quad::integrate_semi_infinite(f, {1e-13, 1e-12, 4000}).value;
            worst_sg = std::max(worst_sg, std::abs(lhs - heat::robin_half_line_kernel(t.first + t.second, x, y, b, 0.0)));
        }
    o.require(worst_sg <= 1e-6, "semigroup " + num(worst_sg));

    double worst_bc = 0.0;
    const double h = 1e-3;
    for (double b : {0.2, 1.0, 4.0})
        for (double y : {0.3, 1.2}) {
            auto K = [&](double x) { return heat::robin_half_line_kernel(0.7, x, y, b, 0.0); };
            const double v = 3 * K(h) - 3 * K(2 * h) + K(3 * h);
            const double dv = (-5 * K(h) + 8 * K(2 * h) - 3 * K(3 * h)) / (2 * h);
            worst_bc = std::max(worst_bc, std::abs(-dv + b * v));
        }
    o.require(worst_bc <= 1e-6, "boundary residual " + num(worst_bc));

    double worst_cons = 0.0;
    for (double x : {0.02, 0.5, 2.0}) {
        auto f = [&](double y) { return heat::robin_half_line_kernel(1.3, x, y, 0.0, 0.0); };
        worst_cons = std::max(worst_cons, std::abs(quad::integrate_semi_infinite(f).value - 1.0));
    }
    o.require(worst_cons <= 1e-8, "conservation " + num(worst_cons));
    o.note("spectral " + num(worst_spec) + ", semigroup " + num(worst_sg) + ", bc " + num(worst_bc) +
           ", conservation " + num(worst_cons));
    return o;
}

// 4. Laurent expansion around u = 0
Outcome criterion4() {
    Outcome o;
    double worst_c0 = 0.0, worst_pole2 = 0.0, worst_res1 = 0.0;
    const std::vector<ReflectingBC> rbcs{robin(0.0), robin(1.0), dirichlet(), robin(-0.3)};
    const std::vector<SemitransparentBC> sbcs{delta(2.0), general_delta(), delta_prime(1.0), general_beta()};
    for (int d : {1, 2, 3})
        for (double x : {0.3, -1.0}) {
            const FieldConfig cfg{d, 1.0, 1.0};
            for (const auto& bc : rbcs) {
                const auto f = R::laurent_fit(cfg, bc, x);
                worst_c0 = std::max(worst_c0, std::abs(f.c0 - R::free_term(cfg) - R::plane_term(cfg, bc, x)));
                if (d == 2) worst_pole2 = std::max(worst_pole2, std::abs(f.c_minus1));
                if (d == 1) worst_res1 = std::max(worst_res1, std::abs(f.c_minus1 - 1 / (2 * kPi)));
            }
            for (const auto& bc : sbcs) {
                const auto f = S::laurent_fit(cfg, bc, x);
                worst_c0 = std::max(worst_c0, std::abs(f.c0 - S::free_term(cfg) - S::plane_term(cfg, bc, x)));
                if (d == 2) worst_pole2 = std::max(worst_pole2, std::abs(f.c_minus1));
                if (d == 1) worst_res1 = std::max(worst_res1, std::abs(f.c_minus1 - 1 / (2 * kPi)));
            }
        }
    o.require(worst_c0 <= 1e-6, "c0 " + num(worst_c0));
    o.require(worst_pole2 < 1e-8, "d=2 pole " + num(worst_pole2));
    o.require(worst_res1 <= 1e-6, "d=1 residue " + num(worst_res1));
    o.note("c0 " + num(worst_c0) + ", |c-1| d=2 " + num(worst_pole2) + ", residue d=1 " + num(worst_res1));
    return o;
}

// 5. small- and large-distance laws, decay rate
Outcome criterion5() {
    Outcome o;
    // worst |ratio - 1| per dimension
    std::vector<double> small_by_d(5, 0.0), large_by_d(5, 0.0);
    for (int d : {2, 3, 4})
        for (double m : {0.5, 1.0, 2.0}) {
            const FieldConfig cfg{d, m, 1.0};
            const double x = 1e-3 / m;
            double& w = small_by_d[d];
            for (const auto& bc : {robin(0.0), robin(m), dirichlet()})
                for (double s : {1.0, -1.0})
                    w = std::max(w, std::abs(R::plane_term(cfg, bc, s * x) / R::small_x_asymptotic(cfg, bc, s * x) - 1));
            for (const auto& bc : {delta_prime(1.0), general_beta()})
                for (double s : {1.0, -1.0})
                    w = std::max(w, std::abs(S::plane_term(cfg, bc, s * x) / S::small_x_asymptotic(cfg, bc, s * x) - 1));
        }
    for (int d : {1, 2, 3, 4})
        for (double m : {0.5, 1.0, 2.0}) {
            const FieldConfig cfg{d, m, 1.0};
            const double x = 20.0 / m;
            double& w = large_by_d[d];
            for (const auto& bc : {robin(0.0), robin(3.0 * m), dirichlet()})
                w = std::max(w, std::abs(R::plane_term(cfg, bc, x) / R::large_x_asymptotic(cfg, bc, x) - 1));
            for (const auto& bc : {delta(2.0 * m), delta_prime(1.0 / m), general_beta()})
                for (double s : {1.0, -1.0})
                    w = std::max(w, std::abs(S::plane_term(cfg, bc, s * x) / S::large_x_asymptotic(cfg, bc, s * x) - 1));
        }
    const double worst_small = *std::max_element(small_by_d.begin(), small_by_d.end());
    const double worst_large = *std::max_element(large_by_d.begin(), large_by_d.end());
    o.require(worst_small <= 0.01, "small-x outside 1%");
    o.require(worst_large <= 0.01, "large-x outside 1%");

    // decay: slope of log(|x|^{d/2} plane) between 5/m and 10/m
    double worst_rate = 0.0;
    for (int d : {1, 2, 3})
        for (double m : {1.0, 2.0}) {
            const FieldConfig cfg{d, m, 1.0};
            auto scaled = [&](double x) { return std::pow(x, 0.5 * d) * std::abs(R::plane_term(cfg, robin(0.0), x)); };
            const double rate = std::log(scaled(5.0) / scaled(10.0)) / 5.0;
            worst_rate = std::max(worst_rate, std::abs(rate / (2 * m) - 1));
            auto sscaled = [&](double x) { return std::pow(x, 0.5 * d) * std::abs(S::plane_term(cfg, delta(3.0), x)); };
            const double srate = std::log(sscaled(5.0) / sscaled(10.0)) / 5.0;
            worst_rate = std::max(worst_rate, std::abs(srate / (2 * m) - 1));
        }
    o.require(worst_rate <= 0.01, "decay rate " + num(worst_rate));

    std::string sm = "small-x by d:", lg = "large-x by d:";
    for (int d : {2, 3, 4}) sm += " " + num(small_by_d[d]);
    for (int d : {1, 2, 3, 4}) lg += " " + num(large_by_d[d]);
    o.note(sm);
    o.note(lg);
    o.note("rate " + num(worst_rate));
    return o;
}

// 6. softening of the pure delta
Outcome criterion6() {
    Outcome o;
    double worst_drop = INFINITY, worst_ctrl = 0.0;
    for (int d : {2, 3}) {
        const FieldConfig cfg{d, 1.0, 1.0};
        auto scaled = [&](const SemitransparentBC& bc, double x) { return std::pow(x, d - 1) * S::plane_term(cfg, bc, x); };
        for (double g : {0.5, 2.0, 10.0}) {
            const double drop = std::abs(scaled(delta(g), 1e-2)) / std::abs(scaled(delta(g), 1e-4));
            worst_drop = std::min(worst_drop, drop);
        }
        const auto ctrl = general_delta();
        const double limit = std::pow(1e-4, d - 1) * S::small_x_asymptotic(cfg, ctrl, 1e-4);
        worst_ctrl = std::max(worst_ctrl, rel(scaled(ctrl, 1e-4), limit));
        worst_ctrl = std::max(worst_ctrl, rel(scaled(ctrl, 1e-3), scaled(ctrl, 1e-4)));
        o.require(limit != 0.0, "control limit vanishes");
    }
    o.require(worst_drop >= 10.0, "drop " + num(worst_drop));
    o.require(worst_ctrl <= 0.05, "control " + num(worst_ctrl));
    o.note("smallest drop " + num(worst_drop) + "x, control deviation " + num(worst_ctrl));
    return o;
}

// 7. massless limits
Outcome criterion7() {
    Outcome o;
    double worst = 0.0;
    const double x = 0.8;
    for (int d : {2, 3}) {
        const FieldConfig c0{d, 0.0, 1.0}, cm{d, 1e-4, 1.0};
        for (const auto& bc : {robin(0.0), robin(0.5), robin(3.0), dirichlet(),
                               ReflectingBC{RobinCoefficient::finite(1.0), RobinCoefficient::dirichlet_marker()}})
            worst = std::max(worst, std::abs(R::massless_value(c0, bc, x).total - R::evaluate(cm, bc, x).total));
        for (const auto& bc : {delta(2.0), general_delta(), delta_prime(1.0), general_beta(),
                               SemitransparentBC{{0, 1}, -2.0, -1.0, -1.0, -1.0}})
            worst = std::max(worst, std::abs(S::massless_value(c0, bc, -x).total - S::evaluate(cm, bc, -x).total));
    }
    o.require(worst <= 1e-3, "d>=2 " + num(worst));

    const double v = R::massless_value({1, 0.0, 1.0}, dirichlet(), 0.5).total;
    const double target = -sf::euler_gamma() / (2 * kPi);
    const double limit = R::evaluate({1, 1e-6, 1.0}, dirichlet(), 0.5).total;
    o.require(std::abs(v - target) <= 1e-9,
              "d=1 Dirichlet " + std::to_string(v) + " vs target " + std::to_string(target) +
                  " (m=1e-6 free+plane gives " + std::to_string(limit) + ")");
    o.note("d>=2 worst " + num(worst));
    return o;
}

int cli_code(std::vector<std::string> args) {
    args.insert(args.begin(), "vacpol");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::run(int(argv.size()), argv.data(), out, err);
}

// 8. divergence and positivity guards
Outcome criterion8() {
    Outcome o;
    auto raises_ir = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const InfraredDivergence&) {
            return true;
        } catch (...) {
        }
        return false;
    };
    o.require(raises_ir([] { R::massless_value({1, 0.0, 1.0}, robin(0.0), 0.5); }), "reflecting Neumann");
    o.require(raises_ir([] { S::massless_value({1, 0.0, 1.0}, delta_prime(1.0), 0.5); }), "pure delta-prime");
    o.require(raises_ir([] { S::evaluate({1, 0.0, 1.0}, delta_prime(3.0), -0.5); }), "delta-prime through evaluate");
    o.require(cli_code({"profile", "--d", "1", "--m", "0", "--b-plus", "0"}) == cli::kInfraredDivergence, "cli exit 3");

    o.require(cli_code({"profile", "--m", "1", "--b-plus", "-1"}) == cli::kInvalidParameters, "b = -m");
    o.require(cli_code({"profile", "--m", "1", "--b-minus", "-3", "--sides", "minus"}) == cli::kInvalidParameters, "b < -m");
    o.require(cli_code({"spectrum", "--m", "1", "--b-plus", "-2"}) == cli::kInvalidParameters, "spectrum b < -m");
    // Lambda_- = -2 for beta = -1, alpha = sigma = 1
    o.require(cli_code({"profile", "--geometry", "semitransparent", "--m", "1", "--beta", "-1"}) ==
                  cli::kInvalidParameters, "Lambda_- < -m");
    // Lambda_- = -1 exactly
    o.require(cli_code({"profile", "--geometry", "semitransparent", "--m", "1", "--beta", "-2"}) ==
                  cli::kInvalidParameters, "Lambda_- = -m");
    o.require(cli_code({"profile", "--geometry", "semitransparent", "--m", "1", "--gamma", "-2"}) ==
                  cli::kInvalidParameters, "delta bound state at threshold");
    return o;
}

// 9. special functions
Outcome criterion9() {
    Outcome o;
    double worst_half = 0.0;
    for (double w = 0.01; w <= 50.0; w *= 1.05)
        worst_half = std::max(worst_half, std::abs(sf::frak_k_scaled(0.5, w) / std::sqrt(kPi / 2) - 1));
    worst_half = std::max(worst_half, std::abs(sf::frak_k_scaled(0.5, 50.0) / std::sqrt(kPi / 2) - 1));
    double worst_rec = 0.0;
    for (double a = -5.0; a <= 3.0; a += 0.25)
        for (double z : {0.05, 0.5, 2.0, 9.0, 30.0}) {
            const double lhs = sf::upper_inc_gamma(a + 1, z);
            const double rhs = a * sf::upper_inc_gamma(a, z) + std::pow(z, a) * std::exp(-z);
            worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::abs(lhs));
        }
    double worst_odd = 0.0;
    for (double z = -6.0; z <= 6.0; z += 0.01) worst_odd = std::max(worst_odd, std::abs(sf::erf(z) + sf::erf(-z)));
    const double e1 = std::abs(sf::erf(1.0) - 0.8427007929497149);
    o.require(worst_half <= 1e-12, "half-order " + num(worst_half));
    o.require(worst_rec <= 1e-10, "recurrence " + num(worst_rec));
    o.require(worst_odd <= 1e-12, "oddness " + num(worst_odd));
    o.require(e1 <= 1e-12 && std::abs(sf::erf(1.0) - 0.8427008) < 5e-8, "erf(1) " + num(e1));
    o.note("half-order " + num(worst_half) + ", recurrence " + num(worst_rec) + ", erf(1) err " + num(e1));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9};
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int i = 1; i <= int(all.size()); ++i) which.push_back(i);

    int failed = 0;
    for (int k : which) {
        if (k < 1 || k > int(all.size())) {
            std::printf("unknown criterion %d\n", k);
            return 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = all[k - 1]();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %s  (%.2f s)  %s\n", k, r.pass ? "PASS" : "FAIL", seconds_since(t0), r.detail.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
