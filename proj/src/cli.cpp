#include "vacpol/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "polarization_common.hpp"
#include "vacpol/couplings.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/heatkernel.hpp"
#include "vacpol/reflecting.hpp"
#include "vacpol/semitransparent.hpp"
#include "vacpol/validation.hpp"

namespace vacpol::cli {
namespace {

using json = nlohmann::ordered_json;
using detail::fmt;

const std::vector<std::string> kProfileColumns{"x1",           "free",         "plane",
                                               "total",        "asympt_small", "asympt_large",
                                               "rel_dev_small", "rel_dev_large"};
const std::vector<std::string> kAsymptoticColumns{"x1", "asympt_small", "asympt_large"};

struct Options {
    std::string geometry = "reflecting";
    int d = 1;
    double m = 1.0;
    double kappa = 1.0;
    std::string b_plus = "0";
    std::string b_minus = "0";
    double omega_re = 1.0;
    double omega_im = 0.0;
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;
    double sigma = 1.0;
    double x_min = 0.1;
    double x_max = 5.0;
    int points = 10;
    std::string spacing = "linear";
    std::string sides = "plus";
    std::string output = "csv";
    std::string columns;
    int threads = 0;
    std::string suite = "all";
    double tol = 1.0;
    std::vector<double> taus{1.0};
    std::vector<double> xs{0.5};
    std::vector<double> ys{0.5};
};

struct Geometry {
    bool reflecting = true;
    ReflectingBC rbc;
    SemitransparentBC sbc;
};

// numeric failure while scanning, tagged with the grid point
struct PointFailure {
    double x1;
    std::exception_ptr error;
};

RobinCoefficient parse_robin(const std::string& text, const char* flag) {
    if (text == "dirichlet") return RobinCoefficient::dirichlet_marker();
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v))
        throw ParameterError(std::string(flag) + " must be a number or 'dirichlet', got '" + text + "'");
    return RobinCoefficient::finite(v);
}

Geometry build_geometry(const Options& o) {
    Geometry g;
    g.reflecting = o.geometry == "reflecting";
    if (g.reflecting) {
        g.rbc = {parse_robin(o.b_plus, "--b-plus"), parse_robin(o.b_minus, "--b-minus")};
        return g;
    }
    std::complex<double> omega{o.omega_re, o.omega_im};
    const double mod = std::abs(omega);
    if (!std::isfinite(mod) || std::abs(mod - 1.0) > 1e-9)
        throw ParameterError("|omega| = " + fmt(mod) + " is not within 1e-9 of 1");
    omega /= mod;
    g.sbc = {omega, o.alpha, o.beta, o.gamma, o.sigma};
    const double det = o.alpha * o.sigma - o.beta * o.gamma;
    if (std::abs(det - 1.0) > 1e-12) {
        std::string hint;
        if (o.beta != 0.0) hint = "; with these alpha, sigma, beta use gamma = " + fmt((o.alpha * o.sigma - 1.0) / o.beta);
        throw ParameterError("need alpha*sigma - beta*gamma = 1, got " + fmt(det) + hint);
    }
    validate(g.sbc);
    return g;
}

FieldConfig build_config(const Options& o) {
    FieldConfig cfg{o.d, o.m, o.kappa};
    validate(cfg);
    return cfg;
}

void check_positivity(const Geometry& g, double m) {
    if (g.reflecting)
        reflecting::check_positivity(g.rbc, m);
    else
        semitransparent::check_positivity(g.sbc, m);
}

std::vector<double> grid(const Options& o) {
    if (!(o.x_min > 0.0) || !(o.x_max > o.x_min) || !std::isfinite(o.x_max))
        throw ParameterError("grid needs 0 < x-min < x-max");
    if (o.points < 2) throw ParameterError("grid needs at least 2 points");
    std::vector<double> base(o.points);
    for (int i = 0; i < o.points; ++i) {
        const double t = double(i) / (o.points - 1);
        base[i] = o.spacing == "log" ? o.x_min * std::pow(o.x_max / o.x_min, t)
                                     : o.x_min + (o.x_max - o.x_min) * t;
    }
    base.front() = o.x_min;
    base.back() = o.x_max;
    std::vector<double> xs;
    if (o.sides != "minus") xs = base;
    if (o.sides != "plus")
        for (double x : base) xs.push_back(-x);
    std::sort(xs.begin(), xs.end());
    return xs;
}

std::vector<std::string> select_columns(const std::string& spec, const std::vector<std::string>& all) {
    if (spec.empty()) return all;
    std::vector<std::string> out;
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (std::find(all.begin(), all.end(), name) == all.end())
            throw ParameterError("unknown column '" + name + "'");
        out.push_back(name);
    }
    if (out.empty()) throw ParameterError("--columns selects nothing");
    return out;
}

double rel_dev(double value, double reference) {
    if (!std::isfinite(reference) || reference == 0.0) return std::nan("");
    return value / reference - 1.0;
}

using Row = std::map<std::string, double>;

Row profile_row(const FieldConfig& cfg, const Geometry& g, double x, bool values,
                std::vector<std::string>& warnings) {
    const double nan = std::nan("");
    Row row{{"x1", x}};
    if (values) {
        const PolarizationValue v = g.reflecting ? reflecting::evaluate(cfg, g.rbc, x)
                                                 : semitransparent::evaluate(cfg, g.sbc, x);
        row["free"] = v.free_term;
        row["plane"] = v.plane_term;
        row["total"] = v.total;
        warnings = v.warnings;
    }
    double small = nan, large = nan;
    if (cfg.m > 0.0) {
        small = g.reflecting ? reflecting::small_x_asymptotic(cfg, g.rbc, x)
                             : semitransparent::small_x_asymptotic(cfg, g.sbc, x);
        large = g.reflecting ? reflecting::large_x_asymptotic(cfg, g.rbc, x)
                             : semitransparent::large_x_asymptotic(cfg, g.sbc, x);
    }
    row["asympt_small"] = small;
    row["asympt_large"] = large;
    if (values) {
        row["rel_dev_small"] = rel_dev(row["plane"], small);
        row["rel_dev_large"] = rel_dev(row["plane"], large);
    }
    return row;
}

// Evaluates every grid point, possibly on several threads; results keep grid order.
std::vector<Row> scan(const FieldConfig& cfg, const Geometry& g, const std::vector<double>& xs,
                      bool values, int threads, std::vector<std::string>& warnings) {
    const std::size_t n = xs.size();
    std::vector<Row> rows(n);
    std::vector<std::vector<std::string>> notes(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = profile_row(cfg, g, xs[i], values, notes[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned count = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
    count = std::min<unsigned>(count, unsigned(n));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < count; ++t) pool.emplace_back(work);
        work();
    }
    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) throw PointFailure{xs[i], errors[i]};
    std::set<std::string> seen;
    for (const auto& list : notes)
        for (const auto& w : list)
            if (seen.insert(w).second) warnings.push_back(w);
    return rows;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json meta_common(const std::string& command, const Options& o, const Geometry& g, bool with_config) {
    json meta;
    meta["command"] = command;
    meta["geometry"] = o.geometry;
    if (with_config) {
        meta["d"] = o.d;
        meta["m"] = o.m;
        meta["kappa"] = o.kappa;
    } else {
        meta["m"] = o.m;
    }
    if (g.reflecting) {
        auto robin = [](const RobinCoefficient& b) { return b.dirichlet ? json("dirichlet") : json(b.value); };
        meta["b_plus"] = robin(g.rbc.plus);
        meta["b_minus"] = robin(g.rbc.minus);
    } else {
        meta["omega_re"] = g.sbc.omega.real();
        meta["omega_im"] = g.sbc.omega.imag();
        meta["alpha"] = g.sbc.alpha;
        meta["beta"] = g.sbc.beta;
        meta["gamma"] = g.sbc.gamma_coupling;
        meta["sigma"] = g.sbc.sigma;
    }
    return meta;
}

void emit_table(std::ostream& out, const std::string& format, json meta,
                const std::vector<std::string>& columns, const std::vector<Row>& rows) {
    if (format == "json") {
        json doc;
        doc["meta"] = std::move(meta);
        json arr = json::array();
        for (const Row& r : rows) {
            json obj;
            for (const auto& c : columns) obj[c] = number(r.at(c));
            arr.push_back(std::move(obj));
        }
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const Row& r : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << fmt(r.at(columns[i]));
        out << '\n';
    }
}

void emit_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
}

int cmd_grid(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
    const bool values = command == "profile";
    const auto columns = select_columns(o.columns, values ? kProfileColumns : kAsymptoticColumns);
    const FieldConfig cfg = build_config(o);
    const Geometry g = build_geometry(o);
    if (!values && !(cfg.m > 0.0)) throw ParameterError("asymptotic curves need m > 0");
    check_positivity(g, cfg.m);
    const auto xs = grid(o);
    std::vector<std::string> warnings;
    const auto rows = scan(cfg, g, xs, values, o.threads, warnings);

    json meta = meta_common(command, o, g, true);
    meta["x_min"] = o.x_min;
    meta["x_max"] = o.x_max;
    meta["points"] = o.points;
    meta["spacing"] = o.spacing;
    meta["sides"] = o.sides;
    meta["columns"] = columns;
    meta["warnings"] = warnings;
    emit_table(out, o.output, std::move(meta), columns, rows);
    if (o.output != "json") emit_warnings(err, warnings);
    return kOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto checks = validation::run(o.suite, o.tol);
    int failed = 0;
    if (o.output == "json") {
        json doc;
        doc["meta"] = {{"command", "validate"}, {"suite", o.suite}, {"tol", o.tol}};
        json arr = json::array();
        for (const auto& c : checks) {
            arr.push_back({{"suite", c.suite},
                           {"check", c.name},
                           {"pass", c.pass},
                           {"measured", number(c.measured)},
                           {"tolerance", c.tolerance},
                           {"note", c.note}});
            failed += !c.pass;
        }
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << '\n';
    } else {
        out << "suite,check,pass,measured,tolerance,note\n";
        for (const auto& c : checks) {
            std::string note = c.note;
            std::replace(note.begin(), note.end(), ',', ';');
            std::replace(note.begin(), note.end(), '\n', ' ');
            out << c.suite << ',' << c.name << ',' << (c.pass ? "true" : "false") << ','
                << fmt(c.measured) << ',' << fmt(c.tolerance) << ',' << note << '\n';
            failed += !c.pass;
        }
    }
    err << checks.size() << " checks, " << failed << " failed\n";
    return failed ? kValidationFailed : kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
    const Geometry g = build_geometry(o);
    if (!std::isfinite(o.m) || o.m < 0.0) throw ParameterError("mass must be >= 0");
    const SpectrumReport rep = g.reflecting ? reflecting::spectrum(g.rbc, o.m)
                                            : semitransparent::spectrum(g.sbc, o.m);
    std::vector<std::pair<std::string, json>> items;
    items.emplace_back("threshold", rep.continuous_threshold);
    for (double e : rep.point_eigenvalues) items.emplace_back("eigenvalue", e);
    if (rep.lambda_plus) items.emplace_back("lambda_plus", *rep.lambda_plus);
    if (rep.lambda_minus) items.emplace_back("lambda_minus", *rep.lambda_minus);
    items.emplace_back("positive", rep.positive);

    if (o.output == "json") {
        json doc;
        doc["meta"] = meta_common("spectrum", o, g, false);
        json arr = json::array();
        for (const auto& [k, v] : items) arr.push_back({{"quantity", k}, {"value", v}});
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << '\n';
    } else {
        out << "quantity,value\n";
        for (const auto& [k, v] : items)
            out << k << ',' << (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : fmt(v.get<double>())) << '\n';
    }
    if (!rep.positive) {
        err << "error: the reduced operator is not positive for these boundary conditions\n";
        return kInvalidParameters;
    }
    return kOk;
}

int cmd_heat_kernel(const Options& o, std::ostream& out) {
    const Geometry g = build_geometry(o);
    if (!std::isfinite(o.m) || o.m < 0.0) throw ParameterError("mass must be >= 0");
    if (o.taus.empty() || o.xs.empty() || o.ys.empty()) throw ParameterError("--tau, --x and --y need values");
    const std::vector<std::string> columns{"tau", "x1", "y1", "re", "im"};
    std::vector<Row> rows;
    for (double t : o.taus)
        for (double x : o.xs)
            for (double y : o.ys) {
                std::complex<double> k = g.reflecting ? heat::reflecting_kernel(t, x, y, g.rbc, o.m)
                                                      : heat::semitransparent_kernel(t, x, y, g.sbc, o.m);
                rows.push_back({{"tau", t}, {"x1", x}, {"y1", y}, {"re", k.real()}, {"im", k.imag()}});
            }
    json meta = meta_common("heat-kernel", o, g, false);
    meta["tau"] = o.taus;
    meta["x1"] = o.xs;
    meta["y1"] = o.ys;
    emit_table(out, o.output, std::move(meta), columns, rows);
    return kOk;
}

void add_common(CLI::App& app, Options& o) {
    app.add_option("--geometry", o.geometry, "reflecting | semitransparent")
        ->check(CLI::IsMember({"reflecting", "semitransparent"}));
    app.add_option("--d", o.d, "space dimension (1..11)");
    app.add_option("--m", o.m, "mass (>= 0)");
    app.add_option("--kappa", o.kappa, "renormalization scale (> 0)");
    app.add_option("--b-plus", o.b_plus, "Robin coefficient for x1 > 0, or 'dirichlet'");
    app.add_option("--b-minus", o.b_minus, "Robin coefficient for x1 < 0, or 'dirichlet'");
    app.add_option("--omega-re", o.omega_re, "Re omega (normalized if |omega| is within 1e-9 of 1)");
    app.add_option("--omega-im", o.omega_im, "Im omega");
    app.add_option("--alpha", o.alpha);
    app.add_option("--beta", o.beta);
    app.add_option("--gamma", o.gamma, "delta strength (alpha*sigma - beta*gamma = 1)");
    app.add_option("--sigma", o.sigma);
    app.add_option("--x-min", o.x_min);
    app.add_option("--x-max", o.x_max);
    app.add_option("--points", o.points);
    app.add_option("--spacing", o.spacing)->check(CLI::IsMember({"linear", "log"}));
    app.add_option("--sides", o.sides)->check(CLI::IsMember({"plus", "minus", "both"}));
    app.add_option("--output", o.output)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--columns", o.columns, "comma-separated subset of the table columns");
    app.add_option("--threads", o.threads, "worker threads (0 = hardware concurrency)")
        ->check(CLI::NonNegativeNumber);
    app.set_config("--config", "", "file of key=value lines; explicit flags take precedence");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Renormalized vacuum polarization near a flat wall", "vacpol"};
    app.fallthrough();
    app.require_subcommand(1);
    add_common(app, o);
    CLI::App* profile = app.add_subcommand("profile", "free, plane and total polarization on an x1 grid");
    CLI::App* validate_cmd = app.add_subcommand("validate", "run the built-in invariant suites");
    validate_cmd->add_option("--suite", o.suite)
        ->check(CLI::IsMember({"all", "specialfns", "heatkernel", "reflecting", "semitransparent"}));
    validate_cmd->add_option("--tol", o.tol, "multiplier applied to every suite tolerance");
    CLI::App* spectrum = app.add_subcommand("spectrum", "threshold, point eigenvalues, positivity");
    CLI::App* heat_cmd = app.add_subcommand("heat-kernel", "tabulate the reduced heat kernel");
    heat_cmd->add_option("--tau", o.taus)->delimiter(',');
    heat_cmd->add_option("--x", o.xs)->delimiter(',');
    heat_cmd->add_option("--y", o.ys)->delimiter(',');
    CLI::App* asymptotics = app.add_subcommand("asymptotics", "leading small- and large-x1 curves");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_msg, e_msg;
        const int code = app.exit(e, o_msg, e_msg);
        out << o_msg.str();
        err << e_msg.str();
        return code == 0 ? kOk : kInvalidParameters;
    }

    std::string where;
    try {
        try {
            if (profile->parsed()) return cmd_grid("profile", o, out, err);
            if (asymptotics->parsed()) return cmd_grid("asymptotics", o, out, err);
            if (validate_cmd->parsed()) return cmd_validate(o, out, err);
            if (spectrum->parsed()) return cmd_spectrum(o, out, err);
            if (heat_cmd->parsed()) return cmd_heat_kernel(o, out);
        } catch (const PointFailure& f) {
            where = " at x1 = " + fmt(f.x1);
            std::rethrow_exception(f.error);
        }
    } catch (const ParameterError& e) {
        err << "error" << where << ": " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const InfraredDivergence& e) {
        err << "error" << where << ": infrared divergence: " << e.what() << '\n';
        return kInfraredDivergence;
    } catch (const NumericalFailure& e) {
        err << "error" << where << ": numerical failure: " << e.what() << " (estimate " << fmt(e.estimate())
            << ", error bound " << fmt(e.error_bound()) << ")\n";
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error" << where << ": " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kInvalidParameters;
}

}  // namespace vacpol::cli
