// pullin: branch sweeps, bound reports, constant tables, power-law transforms,
// asymptotic envelopes and the acceptance suite from the command line.
//
// Exit codes: 0 success, 1 computational failure (or a failed verify),
// 2 invalid input. Results go to --out (default stdout); diagnostics go to
// stderr at the level given by PULLIN_LOG={error|info|debug}.

#include "output.hpp"

#include "criteria.hpp"
#include "pullin/bounds.hpp"
#include "pullin/branch.hpp"
#include "pullin/errors.hpp"
#include "pullin/powerlaw.hpp"
#include "pullin/spectral.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

using namespace pullin;
using cli::Json;
using cli::rounded;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
    std::string family = "mems";
    double p = 2.0;
    std::string N = "2";
    double alpha = 0.0;
    double tol = 1e-10;
    std::string out;
    std::string format = "json";

    // branch
    std::optional<double> m_min, m_max;
    std::size_t m_points = 400;
    bool no_mu1 = false;
    unsigned threads = 0;

    // bounds
    std::optional<double> lambda1, volume, inf_f, sup_f, f_phi;
    bool inside_half_ball = false;
    std::string variant = "derived";

    // constants
    bool beta = false, gamma = false, beta_p = false, gamma_tau = false;
    std::vector<double> tau;

    // asymptotics
    std::optional<double> lambda;
    std::size_t points = 100;

    // verify
    int criterion = 0;
};

struct Result {
    Json result;
    Json summary = Json::object();  // CSV "# key=value" lines
    cli::Table table;
    std::vector<std::string> warnings;
    bool failed = false;  // verify with failing criteria
};

// --- input parsing and validation -------------------------------------------

double parse_real(const std::string& text, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw DomainError(what, std::string("expected a finite number for ") + what + ", got '" + text + "'");
    }
    return v;
}

/// "3" or "3..9" (unit steps).
std::vector<double> parse_dimensions(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_real(text, "--N")};
    const double a = parse_real(text.substr(0, dots), "--N");
    const double b = parse_real(text.substr(dots + 2), "--N");
    require(a <= b && b - a <= 1000, "--N a..b with a <= b", "dimension range must be increasing");
    std::vector<double> out;
    for (double n = a; n <= b + 1e-12; n += 1.0) out.push_back(n);
    return out;
}

Nonlinearity make_family(const Options& o) {
    if (o.family == "exp") return Nonlinearity::exponential();
    if (o.family == "mems") return Nonlinearity::mems(o.p);
    if (o.family == "power") return Nonlinearity::power(o.p);
    throw DomainError("--family in {exp, mems, power}", "unknown family '" + o.family + "'");
}

FormulaVariant make_variant(const Options& o) {
    if (o.variant == "derived") return FormulaVariant::Derived;
    if (o.variant == "printed") return FormulaVariant::AsPrinted;
    throw DomainError("--variant in {derived, printed}", "unknown variant '" + o.variant + "'");
}

double single_dimension(const Options& o) {
    const auto ns = parse_dimensions(o.N);
    require(ns.size() == 1, "--N is a single value", "this command takes a single dimension");
    require(ns[0] >= 1.0, "N >= 1", "dimension must be at least 1");
    return ns[0];
}

void validate_common(const Options& o) {
    make_family(o);
    require(o.format == "json" || o.format == "csv", "--format in {json, csv}", "unknown format '" + o.format + "'");
    require(std::isfinite(o.tol) && o.tol > 0.0 && o.tol < 1e-2, "0 < tol < 1e-2", "tolerance out of range");
    require(std::isfinite(o.alpha) && o.alpha > -2.0, "alpha > -2", "power-law exponent must exceed -2");
}

Json config_of(const std::string& command, const Options& o) {
    Json c;
    c["command"] = command;
    c["family"] = o.family;
    c["p"] = o.family == "exp" ? Json(nullptr) : rounded(o.p);
    c["N"] = o.N;
    c["alpha"] = rounded(o.alpha);
    c["tol"] = rounded(o.tol);
    return c;
}

Json report_json(const BoundReport& r) {
    Json j;
    j["name"] = r.name;
    j["value"] = rounded(r.value);
    j["optimizer"] = r.optimizer ? rounded(*r.optimizer) : Json(nullptr);
    j["valid"] = r.valid;
    j["reason"] = r.reason;
    j["source"] = r.source;
    return j;
}

// --- commands -------------------------------------------------------------------

Result run_branch(const Options& o, Json& config) {
    const auto F = make_family(o);
    const double n = single_dimension(o);
    const ProblemSpec spec{n, F, o.alpha};
    const double m_lo = o.m_min.value_or(1e-3);
    const double m_hi = o.m_max.value_or(F.is_singular() ? F.a_F() - 1e-4 : 40.0);
    require(m_lo > 0.0 && m_hi > m_lo && m_hi < F.a_F(), "0 < m-min < m-max < a_F",
            "center-value range must lie in (0, a_F)");
    require(o.m_points >= 3 && o.m_points <= 100000, "3 <= m-points <= 100000", "m-points out of range");
    config["m_min"] = rounded(m_lo);
    config["m_max"] = rounded(m_hi);
    config["m_points"] = o.m_points;

    BranchOptions opts;
    opts.tol = o.tol;
    opts.compute_mu1 = !o.no_mu1;
    opts.threads = o.threads;
    spdlog::info("branch: {} N={} alpha={} on [{}, {}] with {} points", F.name(), n, o.alpha, m_lo, m_hi,
                 o.m_points);
    const auto b = solve_branch(spec, MSchedule::logspaced(m_lo, m_hi, o.m_points), opts);

    Result r;
    Json pts = Json::array();
    r.table.columns = {"m", "lambda", "mu1"};
    for (const auto& p : b.points) {
        Json row;
        row["m"] = rounded(p.m);
        row["lambda"] = rounded(p.lambda);
        row["mu1"] = rounded(p.mu1);
        pts.push_back(row);
        r.table.rows.push_back(row);
    }
    r.result["points"] = pts;
    r.result["lambda_star"] = rounded(b.lambda_star);
    r.result["m_star"] = rounded(b.m_star);
    r.result["fold_found"] = b.fold_found;
    r.result["mu1_star"] = rounded(b.mu1_star);
    r.result["N_eff"] = rounded(b.transform.N_eff);
    r.result["voltage_factor"] = rounded(b.transform.voltage_factor);
    for (const char* k : {"lambda_star", "m_star", "fold_found", "mu1_star", "N_eff", "voltage_factor"}) {
        r.summary[k] = r.result[k];
    }
    if (!b.fold_found) {
        r.warnings.push_back("no interior maximum of lambda(m) on the schedule; lambda_star is the sampled sup");
    }
    if (o.alpha != 0.0 && opts.compute_mu1) {
        r.warnings.push_back("mu1 is the stability eigenvalue of the constant-profile problem in dimension N_eff");
    }
    return r;
}

Result run_bounds(const Options& o, Json& config) {
    const auto F = make_family(o);
    const double n = single_dimension(o);
    const auto variant = make_variant(o);
    const bool custom = o.lambda1 || o.volume || o.inf_f || o.sup_f || o.f_phi;
    const bool unit_ball = !custom;
    DomainStats s = unit_ball_stats(n, o.alpha);
    if (o.lambda1) s.lambda1 = *o.lambda1;
    if (o.volume) s.volume = *o.volume;
    if (o.inf_f) s.inf_f = *o.inf_f;
    if (o.sup_f) s.sup_f = *o.sup_f;
    if (o.f_phi) s.f_phi_integral = *o.f_phi;
    validate(s);
    config["domain"] = unit_ball ? "unit ball" : "custom";
    config["lambda1"] = rounded(s.lambda1);
    config["volume"] = rounded(s.volume);
    config["inf_f"] = rounded(s.inf_f);
    config["sup_f"] = rounded(s.sup_f);
    config["f_phi"] = rounded(s.f_phi_integral);
    config["variant"] = o.variant;
    config["inside_half_ball"] = o.inside_half_ball;

    Result r;
    std::vector<BoundReport> reports;
    reports.push_back(pullin_voltage_upper(F, s));
    reports.push_back(pullin_distance_lower(F, s));
    const bool f_const = s.inf_f == s.sup_f;
    auto note = [&](const std::string& w) { r.warnings.push_back(w); };
    switch (F.family()) {
        case Family::Exponential:
            if (!f_const) note("exponential L^inf estimates assume f = 1; skipped");
            else if (n == 2.0 || (n >= 3.0 && n <= 9.0)) {
                reports.push_back(exp_upper_bound(n, s, o.inside_half_ball, variant));
                if (n >= 3.0) reports.push_back(lambda1_lower_bound(n, s.volume, variant));
            } else {
                note("exponential L^inf estimate needs N = 2 or 3 <= N <= 9; skipped");
            }
            break;
        case Family::MemsInversePower:
            if (F.exponent() != 2.0) {
                note("MEMS L^inf estimates are available for p = 2 only; skipped");
                break;
            }
            if (f_const && n >= 3.0 && n <= 7.0) reports.push_back(mems_upper_general(n, s, variant));
            if (unit_ball && o.alpha == 0.0 && n <= 11.0 && (n >= 3.0 || n == 1.0 || n == 2.0)) {
                reports.push_back(mems_radial_upper(n));
                if (n <= 2.0) reports.push_back(mems_radial_closed_form(n));
            }
            break;
        case Family::PowerGrowth:
            if (f_const && (n == 3.0 || n == 4.0)) reports.push_back(power_upper_general(n, F.exponent(), s));
            else note("power-growth L^inf estimate needs f = 1 and N in {3, 4}; skipped");
            break;
    }
    r.result = Json::array();
    r.table.columns = {"name", "value", "optimizer", "valid", "reason", "source"};
    for (const auto& b : reports) {
        r.result.push_back(report_json(b));
        r.table.rows.push_back(report_json(b));
        if (!b.valid) note(b.name + ": " + b.reason);
    }
    return r;
}

Result run_constants(const Options& o, Json& config, bool n_given) {
    const auto variant = make_variant(o);
    bool beta = o.beta, gamma = o.gamma;
    if (!o.beta && !o.gamma && !o.beta_p && !o.gamma_tau) beta = gamma = true;
    const auto dims = [&](double lo, double hi) {
        if (n_given) return parse_dimensions(o.N);
        std::vector<double> d;
        for (double n = lo; n <= hi; n += 1.0) d.push_back(n);
        return d;
    };
    if (o.gamma_tau) require(!o.tau.empty(), "--tau given", "--gamma-tau needs at least one --tau value");
    config["N"] = n_given ? Json(o.N) : Json(nullptr);
    config["variant"] = o.variant;

    Result r;
    r.result = Json::array();
    r.table.columns = {"constant", "N", "p", "tau", "value", "optimizer", "valid"};
    auto add = [&](const std::string& name, double n, double p, double tau, double value, std::optional<double> opt,
                   bool valid) {
        Json row;
        row["constant"] = name;
        row["N"] = rounded(n);
        row["p"] = rounded(p);
        row["tau"] = rounded(tau);
        row["value"] = rounded(value);
        row["optimizer"] = opt ? rounded(*opt) : Json(nullptr);
        row["valid"] = valid;
        r.result.push_back(row);
        r.table.rows.push_back(row);
    };
    if (beta) {
        for (double n : dims(3, 9)) {
            const auto b = beta_N(n);
            add("beta_N", n, kNaN, kNaN, b.value, b.optimizer, b.valid);
        }
    }
    if (gamma) {
        for (double n : dims(3, 7)) {
            const auto g = gamma_N(n, variant);
            add("gamma_N", n, kNaN, kNaN, g.value, g.optimizer, g.valid);
        }
    }
    if (o.beta_p) {
        const double p = o.family == "power" ? o.p : 2.0;
        if (o.family != "power") r.warnings.push_back("beta_Np uses p = 2 unless --family power is given");
        for (double n : dims(3, 4)) {
            const auto b = beta_Np(n, p);
            add("beta_Np", n, p, kNaN, b.value, b.optimizer, b.valid);
        }
    }
    if (o.gamma_tau) {
        for (double n : dims(1, 3)) {
            for (double tau : o.tau) add("gamma_tau_N", n, kNaN, tau, gamma_tau_N(tau, n), std::nullopt, true);
        }
    }
    return r;
}

Result run_transform(const Options& o, Json&) {
    const auto F = make_family(o);
    const double n = single_dimension(o);
    const auto t = dim_transform(n, o.alpha);
    Result r;
    r.result["N_eff"] = rounded(t.N_eff);
    r.result["voltage_factor"] = rounded(t.voltage_factor);
    r.result["radius_map_exponent"] = rounded(t.radius_map_exponent);
    std::string regularity = "undecided";
    try {
        regularity = classify_regularity(F, n, o.alpha) == Regularity::Classical ? "classical" : "singular";
    } catch (const DomainError& e) {
        r.warnings.push_back(std::string("regularity not classified: ") + e.what());
    }
    r.result["regularity"] = regularity;
    r.result["alpha_critical"] =
        F.family() == Family::MemsInversePower && F.exponent() == 2.0 ? rounded(alpha_critical_mems(n)) : Json(nullptr);
    double ls = kNaN;
    if (regularity == "singular" && (F.is_singular() || o.alpha == 0.0)) {
        ls = singular_extremal(F, n, o.alpha).lambda_star();
    }
    r.result["singular_lambda_star"] = rounded(ls);
    r.table.columns = {"N_eff", "voltage_factor", "radius_map_exponent", "regularity", "alpha_critical",
                       "singular_lambda_star"};
    r.table.rows.push_back(r.result);
    return r;
}

Result run_asymptotics(const Options& o, Json& config) {
    const auto F = make_family(o);
    const double n = single_dimension(o);
    require(o.alpha == 0.0, "alpha = 0", "asymptotic envelopes are available for constant profiles only");
    const VstarForm form = make_variant(o) == FormulaVariant::Derived ? VstarForm::Derived : VstarForm::AsPrinted;
    const auto ext = singular_extremal(F, n, 0.0);
    const double lambda = o.lambda.value_or(0.9 * ext.lambda_star());
    require(lambda > 0.0 && lambda < ext.lambda_star(), "0 < lambda < lambda*", "voltage must lie in (0, lambda*)");
    require(o.points >= 2 && o.points <= 100000, "2 <= points <= 100000", "points out of range");
    config["lambda"] = rounded(lambda);
    config["points"] = o.points;
    config["variant"] = o.variant;

    const auto env = asymptotic_envelopes(F, n, lambda, form);
    BranchOptions opts;
    opts.tol = o.tol;
    opts.compute_mu1 = false;
    opts.threads = o.threads;
    const ProblemSpec spec{n, F, 0.0};
    const auto branch = solve_branch(spec, opts);
    const auto u = minimal_solution(spec, lambda, branch, o.tol);

    Result r;
    r.result["lambda"] = rounded(lambda);
    r.result["lambda_star"] = rounded(ext.lambda_star());
    Json samples = Json::array();
    r.table.columns = {"r", "lower", "u", "upper", "u_star"};
    std::size_t outside = 0;
    for (double x : logspace(0.01, 1.0, o.points)) {
        Json row;
        row["r"] = rounded(x);
        row["lower"] = rounded(env.lower(x));
        row["u"] = rounded(u.value(x));
        row["upper"] = rounded(env.upper(x));
        row["u_star"] = rounded(ext.value(x));
        if (u.value(x) < env.lower(x) - 1e-3 || u.value(x) > env.upper(x) + 1e-3) ++outside;
        samples.push_back(row);
        r.table.rows.push_back(row);
    }
    r.result["samples"] = samples;
    r.summary["lambda"] = r.result["lambda"];
    r.summary["lambda_star"] = r.result["lambda_star"];
    if (outside > 0) r.warnings.push_back(std::to_string(outside) + " samples fall outside the envelopes by > 1e-3");
    return r;
}

Result run_verify(const Options& o, Json& config) {
    require(o.criterion >= 0 && o.criterion <= static_cast<int>(acceptance::criteria().size()),
            "--criterion in 1..12", "no such criterion");
    config["criterion"] = o.criterion;
    Result r;
    Json rows = Json::array();
    r.table.columns = {"id", "title", "pass", "detail"};
    int passed = 0, failed = 0;
    for (const auto& c : acceptance::criteria()) {
        if (o.criterion != 0 && c.id != o.criterion) continue;
        spdlog::info("verify: criterion {}", c.id);
        const auto out = acceptance::evaluate(c);
        Json row;
        row["id"] = c.id;
        row["title"] = c.title;
        row["pass"] = out.pass;
        row["detail"] = out.detail;
        rows.push_back(row);
        r.table.rows.push_back(row);
        (out.pass ? passed : failed) += 1;
    }
    r.result["criteria"] = rows;
    r.result["passed"] = passed;
    r.result["failed"] = failed;
    r.summary["passed"] = passed;
    r.summary["failed"] = failed;
    r.failed = failed > 0;
    return r;
}

void setup_logging() {
    auto logger = spdlog::stderr_logger_mt("pullin");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* env = std::getenv("PULLIN_LOG");
    const std::string level = env ? env : "error";
    if (level == "debug") spdlog::set_level(spdlog::level::debug);
    else if (level == "info") spdlog::set_level(spdlog::level::info);
    else {
        spdlog::set_level(spdlog::level::err);
        if (level != "error") spdlog::error("PULLIN_LOG='{}' not recognised; using 'error'", level);
    }
}

int fail(int code, const std::string& kind, const std::string& precondition, const std::string& message) {
    Json e;
    e["error"] = kind;
    e["precondition"] = precondition;
    e["message"] = message;
    std::cerr << e.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    Options o;
    CLI::App app{"Pull-in voltage and distance lab for -Delta u = lambda |x|^alpha F(u) on balls"};
    app.require_subcommand(1);

    auto common = [&o](CLI::App* c) {
        c->add_option("--family", o.family, "exp | mems | power")->capture_default_str();
        c->add_option("--p", o.p, "exponent of the MEMS or power-growth family")->capture_default_str();
        c->add_option("--N", o.N, "dimension (constants also take a range a..b)")->capture_default_str();
        c->add_option("--alpha", o.alpha, "power-law profile exponent")->capture_default_str();
        c->add_option("--tol", o.tol, "relative tolerance")->capture_default_str();
        c->add_option("--out", o.out, "output path (default stdout)");
        c->add_option("--format", o.format, "json | csv")->capture_default_str();
        c->add_option("--threads", o.threads, "worker threads (0 = hardware)");
        c->add_option("--variant", o.variant, "derived | printed formula variant")->capture_default_str();
    };

    auto* branch = app.add_subcommand("branch", "solution branch lambda(m) with stability eigenvalues");
    common(branch);
    branch->add_option("--m-min", o.m_min, "smallest center value");
    branch->add_option("--m-max", o.m_max, "largest center value");
    branch->add_option("--m-points", o.m_points, "number of log-spaced center values")->capture_default_str();
    branch->add_flag("--no-mu1", o.no_mu1, "skip the stability eigenvalue");

    auto* bounds = app.add_subcommand("bounds", "analytic bounds on the pull-in voltage and distance");
    common(bounds);
    bounds->add_option("--lambda1", o.lambda1, "first Dirichlet eigenvalue of the domain");
    bounds->add_option("--volume", o.volume, "domain volume");
    bounds->add_option("--inf-f", o.inf_f, "inf of the permittivity profile");
    bounds->add_option("--sup-f", o.sup_f, "sup of the permittivity profile");
    bounds->add_option("--f-phi", o.f_phi, "int f phi with int phi = 1");
    bounds->add_flag("--inside-half-ball", o.inside_half_ball, "assert the domain lies in the ball of radius 1/2");

    auto* constants = app.add_subcommand("constants", "tables of the minimized constants");
    common(constants);
    constants->add_flag("--beta", o.beta, "beta_N");
    constants->add_flag("--gamma", o.gamma, "gamma_N");
    constants->add_flag("--beta-p", o.beta_p, "beta_{N,p}");
    constants->add_flag("--gamma-tau", o.gamma_tau, "gamma(tau, N)");
    constants->add_option("--tau", o.tau, "tau values for --gamma-tau");

    auto* transform = app.add_subcommand("transform", "power-law to constant-profile transform");
    common(transform);

    auto* asymptotics = app.add_subcommand("asymptotics", "envelopes of minimal solutions near singular extremals");
    common(asymptotics);
    asymptotics->add_option("--lambda", o.lambda, "voltage (default 0.9 lambda*)");
    asymptotics->add_option("--points", o.points, "number of log-spaced radii in [0.01, 1]")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    common(verify);
    verify->add_option("--criterion", o.criterion, "run only criterion k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, "invalid-arguments", "valid command line", e.what());
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        validate_common(o);
        Json config = config_of(command, o);
        Result r;
        if (command == "branch") r = run_branch(o, config);
        else if (command == "bounds") r = run_bounds(o, config);
        else if (command == "constants") r = run_constants(o, config, sub->count("--N") > 0);
        else if (command == "transform") r = run_transform(o, config);
        else if (command == "asymptotics") r = run_asymptotics(o, config);
        else r = run_verify(o, config);

        for (const auto& w : r.warnings) spdlog::info("warning: {}", w);
        std::string text;
        if (o.format == "json") {
            Json doc;
            doc["command"] = command;
            doc["config"] = config;
            doc["result"] = r.result;
            doc["warnings"] = r.warnings;
            text = doc.dump(2) + "\n";
        } else {
            Json summary;
            summary["command"] = command;
            for (const auto& [k, v] : r.summary.items()) summary[k] = v;
            for (std::size_t i = 0; i < r.warnings.size(); ++i) summary["warning" + std::to_string(i)] = r.warnings[i];
            text = cli::to_csv(summary, r.table);
        }
        cli::write_atomically(o.out, text);
        return r.failed ? 1 : 0;
    } catch (const DomainError& e) {
        return fail(2, "domain-error", e.precondition(), e.what());
    } catch (const ComputationError& e) {
        return fail(1, "computation-error", "", e.what());
    } catch (const std::exception& e) {
        return fail(1, "error", "", e.what());
    }
}
