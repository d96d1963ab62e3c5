#include "pullin/bounds.hpp"

#include "pullin/errors.hpp"
#include "pullin/spectral.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace pullin {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const double kSqrt6 = std::sqrt(6.0);

double mems_energy_base(double t) { return 4.0 * (2.0 * t + 1.0) / (4.0 * t + 2.0 - t * t); }

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

BoundReport invalid(std::string name, std::string reason, std::string source) {
    BoundReport r;
    r.name = std::move(name);
    r.value = kNaN;
    r.valid = false;
    r.reason = std::move(reason);
    r.source = std::move(source);
    return r;
}

bool is_integer(double x) { return std::floor(x) == x; }

void check_stats_dimension(double n, const DomainStats& stats) {
    validate(stats);
    require(std::abs(stats.N - n) <= 1e-12 * std::max(1.0, n), "stats.N == N",
            "domain statistics were computed for a different dimension");
}

double volume_scaling(double n, double volume, FormulaVariant variant) {
    const double s = variant == FormulaVariant::Derived ? 2.0 / n : n / 2.0;
    return std::pow(volume / volume_unit_ball(n), s);
}

}  // namespace

double volume_unit_ball(double n) {
    require(std::isfinite(n) && n > 0.0, "N > 0", "dimension must be positive");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

void validate(const DomainStats& s) {
    require(std::isfinite(s.N) && s.N >= 1.0, "N >= 1", "dimension must be at least 1");
    require(std::isfinite(s.lambda1) && s.lambda1 > 0.0, "lambda1 > 0", "first eigenvalue must be positive");
    require(std::isfinite(s.volume) && s.volume > 0.0, "volume > 0", "domain volume must be positive");
    require(s.inf_f >= 0.0 && std::isfinite(s.inf_f), "inf_f >= 0", "inf of f must be finite and non-negative");
    require(s.sup_f > 0.0, "sup_f > 0", "sup of f must be positive");
    require(s.inf_f <= s.sup_f, "inf_f <= sup_f", "inf of f exceeds sup of f");
    const double slack = 1e-9 * std::max(1.0, std::abs(s.f_phi_integral));
    require(s.f_phi_integral >= s.inf_f - slack && s.f_phi_integral <= s.sup_f + slack,
            "inf_f <= f_phi_integral <= sup_f", "int f phi must lie between inf f and sup f");
}

DomainStats unit_ball_stats(double n, double alpha) {
    require(std::isfinite(alpha) && alpha > -2.0, "alpha > -2", "power-law exponent must exceed -2");
    DomainStats s;
    s.N = n;
    s.lambda1 = lambda1_ball(n).eigenvalue;
    s.volume = volume_unit_ball(n);
    s.f_phi_integral = profile_weight_ratio(n, alpha);
    // |x|^alpha on the closed unit ball.
    if (alpha > 0.0) {
        s.inf_f = 0.0;
        s.sup_f = 1.0;
    } else if (alpha < 0.0) {
        s.inf_f = 1.0;
        s.sup_f = kInf;
    }
    return s;
}

Minimum minimize_on_open_interval(const std::function<double(double)>& f, double a, double b, std::size_t grid) {
    require(a < b && grid >= 3, "a < b", "minimization interval is empty");
    const double lo = a + 1e-9;
    const double hi = b - 1e-9;
    require(lo < hi, "b - a > 2e-9", "minimization interval is too narrow");
    auto g = [&f](double x) {
        const double v = f(x);
        return std::isfinite(v) ? v : kInf;
    };
    std::size_t best = 0;
    double best_val = kInf;
    std::vector<double> xs(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
        const double v = g(xs[i]);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    if (!std::isfinite(best_val)) throw ComputationError("objective is not finite anywhere on the interval");
    const double l = xs[best == 0 ? 0 : best - 1];
    const double r = xs[std::min(best + 1, grid - 1)];
    std::uintmax_t iters = 200;
    auto res = boost::math::tools::brent_find_minima(g, l, r, std::numeric_limits<double>::digits / 2, iters);
    if (res.second <= best_val) return {res.first, res.second};
    return {xs[best], best_val};
}

BoundReport pullin_voltage_upper(const Nonlinearity& F, const DomainStats& stats) {
    validate(stats);
    const auto bc = bf_cf(F);
    const double t1 = stats.inf_f > 0.0 ? stats.lambda1 * bc.B_F / stats.inf_f : kInf;
    const double t2 = stats.f_phi_integral > 0.0 ? stats.lambda1 * bc.C_F / stats.f_phi_integral : kInf;
    BoundReport r;
    r.name = "pullin_voltage_upper";
    r.value = std::min(t1, t2);
    r.source = t1 <= t2 ? "lambda_1 B_F / inf f" : "lambda_1 C_F / int f phi";
    return r;
}

BoundReport pullin_distance_lower(const Nonlinearity& F, const DomainStats& stats) {
    validate(stats);
    const auto bc = bf_cf(F);
    const double z1 = std::isfinite(stats.sup_f) ? stats.inf_f / (bc.B_F * stats.sup_f) : 0.0;
    const double z2 = std::isfinite(stats.sup_f) ? stats.f_phi_integral / (bc.C_F * stats.sup_f) : 0.0;
    BoundReport r;
    r.name = "pullin_distance_lower";
    r.value = eval_fprime_inverse(F, std::max(z1, z2));
    r.source = "(F')^-1 of the voltage upper bound; assumes a classical extremal";
    return r;
}

BoundReport pullin_distance_lower_closed_form(const Nonlinearity& F, const DomainStats& stats) {
    validate(stats);
    const double p = F.exponent();
    const double ratio = stats.inf_f / stats.sup_f;      // inf f / sup f
    const double mean = stats.f_phi_integral / stats.sup_f;  // int f phi / sup f
    BoundReport r;
    r.name = "pullin_distance_lower_closed_form";
    switch (F.family()) {
        case Family::MemsInversePower: {
            const double a = ratio > 0.0 ? p / (p + 1.0) * std::pow(1.0 / ratio, 1.0 / (p + 1.0)) : kInf;
            const double b = mean > 0.0 ? std::pow(p / (p + 1.0) / mean, 1.0 / (p + 1.0)) : kInf;
            r.value = 1.0 - std::min(a, b);
            r.source = "MEMS closed form, min of the two expressions";
            break;
        }
        case Family::PowerGrowth: {
            const double a = p / (p - 1.0) * std::pow(ratio, 1.0 / (p - 1.0));
            const double b = std::pow((p - 1.0) / p * mean, 1.0 / (p - 1.0));
            r.value = std::max(a, b) - 1.0;
            r.source = "power-growth closed form";
            break;
        }
        case Family::Exponential: {
            const double a = ratio > 0.0 ? 1.0 + std::log(ratio) : -kInf;
            const double b = mean > 0.0 ? std::log(mean) : -kInf;
            r.value = std::max(a, b);
            r.source = "exponential closed form";
            break;
        }
    }
    return r;
}

bool stability_necessary_check(const Nonlinearity& F, const DomainStats& stats, double lambda_star,
                               double u_star_norm) {
    validate(stats);
    require(std::isfinite(lambda_star) && lambda_star >= 0.0, "lambda* >= 0", "pull-in voltage must be non-negative");
    require(u_star_norm >= 0.0 && u_star_norm < F.a_F(), "0 <= ||u*|| < a_F",
            "pull-in distance must lie in the domain of F");
    if (lambda_star == 0.0) return false;
    return stats.lambda1 <= lambda_star * stats.sup_f * eval_deriv(F, u_star_norm);
}

// --- exponential -------------------------------------------------------------

double beta_N_objective(double t, double n) {
    const double d = 4.0 * t + 2.0 - n;
    if (!(t > 0.0 && t < 2.0 && d > 0.0)) return kNaN;
    return std::pow(n, -1.0 / (2.0 * t + 1.0)) * std::pow(2.0 * t / d, 2.0 * t / (2.0 * t + 1.0)) *
           std::pow(4.0 / (2.0 - t), 1.0 / t);
}

BoundReport beta_N(double n) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    const std::string src = "exponential L^inf estimate, t in ((N-2)/4, 2)";
    const double lo = std::max(0.0, (n - 2.0) / 4.0);
    if (lo >= 2.0 - 2e-9) return invalid("beta_N", "t-window ((N-2)/4, 2) is empty for N >= 10", src);
    auto m = minimize_on_open_interval([n](double t) { return beta_N_objective(t, n); }, lo, 2.0);
    BoundReport r;
    r.name = "beta_N";
    r.value = m.value;
    r.optimizer = m.x;
    r.source = src;
    if (n < 3.0 || n > 9.0) {
        r.valid = false;
        r.reason = "estimate holds for 3 <= N <= 9; value is formal";
    }
    return r;
}

double lambda_p_R(double p, double R) {
    require(std::isfinite(p) && p > -1.0, "p > -1", "Lambda(p, R) needs p > -1");
    require(R > 0.0 && R <= 1.0, "0 < R <= 1", "Lambda(p, R) needs 0 < R <= 1");
    // r = e^-s: int_{-ln R}^inf s^p e^{-2s} ds.
    const double s0 = -std::log(R);
    // The integrand peaks at s = max(s0, p/2); past double range the integral is +inf.
    const double s_peak = std::max(s0, 0.5 * p);
    if (s_peak > 0.0 && p * std::log(s_peak) - 2.0 * s_peak > 700.0) return kInf;
    boost::math::quadrature::exp_sinh<double> q;
    auto f = [p, s0](double x) {
        const double s = s0 + x;
        return s > 0.0 ? std::exp(p * std::log(s) - 2.0 * s) : 0.0;
    };
    double err = 0.0;
    const double v = q.integrate(f, 0.0, kInf, std::sqrt(std::numeric_limits<double>::epsilon()) * 1e-4, &err);
    if (!std::isfinite(v)) throw ComputationError("Lambda(p, R) quadrature did not converge");
    return v;
}

BoundReport exp_upper_bound(double n, const DomainStats& stats, bool inside_half_ball, FormulaVariant variant) {
    check_stats_dimension(n, stats);
    if (n == 2.0) {
        const std::string src = "two-dimensional logarithmic-kernel estimate, t in (0, 2)";
        const double R = std::sqrt(stats.volume / std::numbers::pi);
        if (!(R < 1.0)) {
            return invalid("exp_upper_bound", "needs |Omega| < pi so that Lambda(p, R) is defined", src);
        }
        auto obj = [&](double t) {
            const double p = (2.0 * t + 1.0) / (2.0 * t);
            return std::pow(4.0 / (2.0 - t), 1.0 / t) *
                   std::pow(stats.volume / (2.0 * std::numbers::pi), 1.0 / (2.0 * t + 1.0)) *
                   std::pow(lambda_p_R(p, R), 2.0 * t / (2.0 * t + 1.0));
        };
        auto m = minimize_on_open_interval(obj, 0.0, 2.0, 400);
        BoundReport r;
        r.name = "exp_upper_bound";
        r.value = stats.lambda1 / kE * m.value;
        r.optimizer = m.x;
        r.source = src;
        if (!inside_half_ball) {
            r.valid = false;
            r.reason = "requires Omega contained in the ball of radius 1/2";
        }
        return r;
    }
    auto b = beta_N(n);
    if (!std::isfinite(b.value)) return invalid("exp_upper_bound", b.reason, b.source);
    BoundReport r;
    r.name = "exp_upper_bound";
    r.value = stats.lambda1 * b.value / (kE * (n - 2.0)) * volume_scaling(n, stats.volume, variant);
    r.optimizer = b.optimizer;
    r.source = "lambda_1 beta_N / (e (N-2)) (|Omega|/omega_N)^" +
               std::string(variant == FormulaVariant::Derived ? "(2/N)" : "(N/2)");
    if (n < 3.0 || n > 9.0) {
        r.valid = false;
        r.reason = "estimate holds for 3 <= N <= 9 (N = 2 uses the logarithmic form)";
    }
    return r;
}

BoundReport lambda1_lower_bound(double n, double volume, FormulaVariant variant) {
    require(std::isfinite(volume) && volume > 0.0, "volume > 0", "domain volume must be positive");
    auto b = beta_N(n);
    if (!std::isfinite(b.value)) return invalid("lambda1_lower_bound", b.reason, b.source);
    BoundReport r;
    r.name = "lambda1_lower_bound";
    r.value = kE * (n - 2.0) / b.value / volume_scaling(n, volume, variant);
    r.optimizer = b.optimizer;
    r.source = "inverse of the exponential upper bound combined with ||u*|| >= 1";
    r.valid = b.valid;
    r.reason = b.reason;
    return r;
}

// --- MEMS --------------------------------------------------------------------

double gamma_N_objective(double t, double n, FormulaVariant variant) {
    const double d = 4.0 * t + 6.0 - 3.0 * n;
    const double e_den = 4.0 * t + 2.0 - t * t;
    if (!(t > 0.0 && d > 0.0 && e_den > 0.0)) return kNaN;
    const double e = mems_energy_base(t);
    const double common = std::pow(n, -3.0 / (2.0 * t + 3.0)) * std::pow(2.0 * t / d, 2.0 * t / (2.0 * t + 3.0));
    if (variant == FormulaVariant::Derived) return 8.0 / 27.0 * common * std::pow(e, 3.0 / t);
    return 16.0 / 27.0 * common * std::pow(e, 2.0 / t);
}

BoundReport gamma_N(double n, FormulaVariant variant) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    const std::string src = variant == FormulaVariant::Derived
                                ? "MEMS log-convexity estimate, energy factor E^(3/t) with 8/27"
                                : "MEMS log-convexity estimate as printed, E^(2/t) with 16/27";
    const double lo = std::max(0.0, 0.75 * (n - 2.0));
    const double hi = 2.0 + kSqrt6;
    if (lo >= hi - 2e-9) return invalid("gamma_N", "t-window (3(N-2)/4, 2 + sqrt 6) is empty", src);
    auto m = minimize_on_open_interval([n, variant](double t) { return gamma_N_objective(t, n, variant); }, lo, hi);
    BoundReport r;
    r.name = "gamma_N";
    r.value = m.value;
    r.optimizer = m.x;
    r.source = src;
    if (n < 3.0 || n > 7.0) {
        r.valid = false;
        r.reason = "estimate holds for 3 <= N <= 7; value is formal";
    }
    return r;
}

BoundReport mems_upper_general(double n, const DomainStats& stats, FormulaVariant variant) {
    check_stats_dimension(n, stats);
    auto g = gamma_N(n, variant);
    if (!std::isfinite(g.value)) return invalid("mems_upper_general", g.reason, g.source);
    BoundReport r;
    r.name = "mems_upper_general";
    const double expo = stats.lambda1 * g.value / (2.0 * (n - 2.0)) * std::pow(stats.volume / volume_unit_ball(n), 2.0 / n);
    r.value = 1.0 - std::exp(-expo);
    r.optimizer = g.optimizer;
    r.source = g.source;
    r.valid = g.valid;
    r.reason = g.reason;
    return r;
}

// --- power growth --------------------------------------------------------------

PowerWindow beta_Np_window(double n, double p) {
    require(std::isfinite(p) && p > 1.0, "p > 1", "power-growth exponent must exceed 1");
    const double s = std::sqrt(p * p - p);
    return {p - s, p + s, p * n / 4.0 - p / 2.0 + 0.5};
}

double beta_Np_objective(double t, double n, double p) {
    const double a = 2.0 * t * p - p - t * t;
    const double b = 2.0 * t - 1.0;
    const double c = 4.0 * t + 2.0 * p - 2.0 - n * p;
    const double q = 2.0 * t + p - 1.0;
    if (!(a > 0.0 && b > 0.0 && c > 0.0 && q > 0.0)) return kNaN;
    return std::pow(a, -p / t) * std::pow(b, b / q + p / t) * std::pow(2.0 * p, p / t) /
           (std::pow(n, p / q) * std::pow(c, b / q));
}

BoundReport beta_Np(double n, double p) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    const auto w = beta_Np_window(n, p);
    const std::string src = "power-growth L^inf estimate, max{t_p^-, t_Np} < t < t_p^+";
    if (w.lo() >= w.t_plus - 2e-9) return invalid("beta_Np", "t-window is empty", src);
    auto m = minimize_on_open_interval([n, p](double t) { return beta_Np_objective(t, n, p); }, w.lo(), w.t_plus);
    BoundReport r;
    r.name = "beta_Np";
    r.value = m.value;
    r.optimizer = m.x;
    r.source = src;
    if (!(n == 3.0 || n == 4.0)) {
        r.valid = false;
        r.reason = "estimate is stated for N = 3 or N = 4 only";
    }
    return r;
}

BoundReport power_upper_general(double n, double p, const DomainStats& stats) {
    check_stats_dimension(n, stats);
    auto b = beta_Np(n, p);
    if (!std::isfinite(b.value)) return invalid("power_upper_general", b.reason, b.source);
    BoundReport r;
    r.name = "power_upper_general";
    r.value = std::pow(p - 1.0, p - 1.0) * stats.lambda1 * b.value / (std::pow(p, p) * (n - 2.0)) *
              std::pow(stats.volume / volume_unit_ball(n), 2.0 / n);
    r.optimizer = b.optimizer;
    r.source = b.source;
    r.valid = b.valid;
    r.reason = b.reason;
    return r;
}

// --- shared constants -----------------------------------------------------------

double energy_bound(const Nonlinearity& F, double t, double volume) {
    require(std::isfinite(volume) && volume > 0.0, "volume > 0", "domain volume must be positive");
    switch (F.family()) {
        case Family::Exponential:
            require(t > 0.0 && t < 2.0, "0 < t < 2", "exponential energy estimate needs 0 < t < 2");
            return std::pow(4.0 / (2.0 - t), 1.0 / t) * std::pow(volume, 1.0 / (2.0 * t + 1.0));
        case Family::MemsInversePower:
            require_mems_p2(F, "energy_bound");
            require(t > 0.0 && t < 2.0 + kSqrt6, "0 < t < 2 + sqrt 6", "MEMS energy estimate needs 0 < t < 2 + sqrt 6");
            return std::pow(mems_energy_base(t), 2.0 / t) * std::pow(volume, 2.0 / (2.0 * t + 3.0));
        case Family::PowerGrowth:
            break;
    }
    throw DomainError("F in {exp, mems(p=2)}", "no energy estimate for the power-growth family");
}

double gamma_tau_N(double tau, double n) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    require(n >= 3.0 || is_integer(n), "N in {1, 2} or N >= 3", "gamma(tau, N) is undefined for 1 < N < 3 non-integer");
    require(std::isfinite(tau) && tau > std::max(1.0, n / 2.0), "tau > max{1, N/2}",
            "gamma(tau, N) needs tau > max{1, N/2}");
    if (n == 1.0) return tau / (2.0 * tau - 1.0);
    if (n == 2.0) return tau / (4.0 * (tau - 1.0));
    const double e = (tau - 1.0) / tau;
    return std::pow(tau - 1.0, e) / ((n - 2.0) * std::pow(n, 1.0 / tau) * std::pow(2.0 * tau - n, e));
}

double C_t_N(double t, double n, double lambda1) {
    require(t > 0.0 && t < 2.0 + kSqrt6, "0 < t < 2 + sqrt 6", "C(t, N) needs 0 < t < 2 + sqrt 6");
    require(std::isfinite(lambda1) && lambda1 > 0.0, "lambda1 > 0", "first eigenvalue must be positive");
    return 4.0 * lambda1 * gamma_tau_N(t + 1.5, n) / 27.0 * std::pow(mems_energy_base(t), 2.0 / t);
}

double mems_radial_rhs(double t, double n) {
    return std::pow(mems_energy_base(t), (2.0 * t + 3.0) / t) / n;
}

double mems_radial_integral(double m, double t, double n, double lambda1) {
    require(m >= 0.0 && m < 1.0, "0 <= m < 1", "sup-norm must lie in [0, 1)");
    const double a = 1.0 - m;
    const double C = C_t_N(t, n, lambda1);
    const double q = 2.0 * t + 3.0;
    const double k = (4.0 * t + 6.0 - 2.0 * n) / q;
    require(k > 0.0, "4t + 6 > 2N", "radial exponent must be positive");
    // s = R^k: (1/k) int_0^1 s^(N/k - 1) (a + C s)^-q ds, which peaks near
    // s = a/C when a is small; split the range geometrically from there.
    const double b = n / k;
    auto f = [a, C, q, b](double s) { return std::pow(s, b - 1.0) * std::pow(a + C * s, -q); };
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double tol = 1e-12;
    double total = 0.0;
    if (!std::isfinite(C)) throw ComputationError("C(t, N) overflows; t is too close to 0");
    double left = 0.0;
    double right = std::clamp(a / C, 1e-300, 1.0);
    while (left < 1.0) {
        total += integrator.integrate(f, left, right, tol);
        left = right;
        right = std::min(1.0, right * 16.0);
    }
    if (!std::isfinite(total)) throw ComputationError("radial MEMS quadrature did not converge");
    return total / k;
}

double mems_radial_root(double t, double n, double lambda1) {
    const double rhs = mems_radial_rhs(t, n);
    // Near t = 0 both sides overflow; the inequality carries no information there.
    if (!std::isfinite(rhs) || !std::isfinite(C_t_N(t, n, lambda1))) return 1.0;
    // G increases with m; solve in log(1 - m).
    auto h = [&](double la) {
        const double m = -std::expm1(la);
        return std::log(mems_radial_integral(m, t, n, lambda1)) - std::log(rhs);
    };
    const double la_min = std::log(1e-14);
    const double h_lo = h(la_min);  // m close to 1
    if (h_lo <= 0.0) return 1.0;
    const double h_hi = h(0.0);  // m = 0
    if (h_hi >= 0.0) return 0.0;
    std::uintmax_t iters = 200;
    auto stop = [](double x, double y) { return std::abs(x - y) <= 1e-13 * std::max(1.0, std::abs(x)); };
    auto root = boost::math::tools::toms748_solve(h, la_min, 0.0, h_lo, h_hi, stop, iters);
    return -std::expm1(0.5 * (root.first + root.second));
}

BoundReport mems_radial_upper(double n) {
    require(std::isfinite(n) && n >= 1.0 && n <= 11.0, "1 <= N <= 11", "radial MEMS estimate needs 1 <= N <= 11");
    require(n >= 3.0 || is_integer(n), "N in {1, 2} or N >= 3", "radial MEMS estimate is undefined for 1 < N < 3 non-integer");
    const std::string src = "radial Holder estimate with the energy bound, infimum over t";
    const double lam1 = lambda1_ball(n).eigenvalue;
    const double lo = std::max(0.0, (n - 3.0) / 2.0);
    const double hi = 2.0 + kSqrt6;
    auto m = minimize_on_open_interval([&](double t) { return mems_radial_root(t, n, lam1); }, lo, hi);
    BoundReport r;
    r.name = "mems_radial_upper";
    r.value = std::min(1.0, m.value);
    r.optimizer = m.x;
    r.source = src;
    if (!(r.value < 1.0)) {
        r.valid = false;
        r.value = 1.0;
        r.optimizer.reset();
        r.reason = "the inequality does not keep the sup-norm below 1 for any admissible t";
    }
    return r;
}

BoundReport mems_radial_closed_form(double n) {
    require(n == 1.0 || n == 2.0, "N in {1, 2}", "closed-form radial bounds exist only for N = 1, 2");
    const double lam1 = lambda1_ball(n).eigenvalue;
    const double hi = 2.0 + kSqrt6;
    std::function<double(double)> neg;
    double lo = 0.0;
    if (n == 1.0) {
        neg = [lam1](double t) {
            const double C = C_t_N(t, 1.0, lam1);
            const double e = std::pow(mems_energy_base(t), (2.0 * t + 3.0) / t);
            return -std::pow(2.0 * C * (t + 1.0) * e + std::pow(C, -(2.0 + 2.0 * t)), -1.0 / (2.0 * t + 2.0));
        };
    } else {
        lo = 0.5 - 1e-9;  // closed at 1/2
        neg = [lam1](double t) {
            const double C = C_t_N(t, 2.0, lam1);
            const double e = std::pow(mems_energy_base(t), (2.0 * t + 3.0) / t);
            return -std::pow(C * C * (t + 1.0) * e + (2.0 * t + 2.0) * std::pow(C, -(2.0 * t + 1.0)),
                             -1.0 / (2.0 * t + 1.0));
        };
    }
    auto m = minimize_on_open_interval(neg, lo, hi);
    BoundReport r;
    r.name = "mems_radial_closed_form";
    r.value = 1.0 + m.value;
    r.optimizer = m.x;
    r.source = "explicit relaxation with the radial exponent replaced by 1, N = " + fmt(n);
    return r;
}

}  // namespace pullin
