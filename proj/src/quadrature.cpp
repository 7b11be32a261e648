#include "vacpol/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "vacpol/errors.hpp"

namespace vacpol::quad {
namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

double checked(const Integrand& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y))
        throw NumericalFailure("quadrature: integrand is not finite at x = " + std::to_string(x),
                               std::numeric_limits<double>::quiet_NaN(),
                               std::numeric_limits<double>::infinity());
    return y;
}

Segment gk15(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = checked(f, center);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    std::array<double, 7> f1{}, f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        f1[j] = checked(f, center - dx);
        f2[j] = checked(f, center + dx);
        const double s = f1[j] + f2[j];
        resk += wgk[j] * s;
        resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * s;
    }
    const double reskh = 0.5 * resk;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

    const double ah = std::abs(half);
    resasc *= ah;
    resabs *= ah;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > kUflow / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    return {a, b, resk * half, err};
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
        throw ParameterError("quadrature: tolerances must be positive and budget >= 1");
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw ParameterError("quadrature: need finite a < b");

    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int intervals = 1;

    auto converged = [&] { return total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (!converged()) {
        if (intervals >= spec.max_subdivisions)
            throw NumericalFailure("quadrature: subdivision budget of " +
                                       std::to_string(spec.max_subdivisions) + " exhausted",
                                   total, total_err);
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval at machine resolution; its error cannot shrink further
            throw NumericalFailure("quadrature: interval collapsed near x = " + std::to_string(mid),
                                   total, total_err);
        }
        heap.pop();
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;

        // resum now and then so the running totals do not drift
        if (intervals % 64 == 0 || converged()) {
            auto copy = heap;
            total = 0.0;
            total_err = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                total_err += copy.top().error;
                copy.pop();
            }
        }
    }
    return {total, total_err, intervals};
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadSpec& spec, double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ParameterError("quadrature: scale must be positive and finite");
    auto mapped = [&](double t) {
        const double s = 1.0 - t;
        const double v = scale * t / s;
        const double fv = f(v);
        if (fv == 0.0) return 0.0;
        return fv * scale / (s * s);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec);
}

}  // namespace vacpol::quad
