#include "pullin/branch.hpp"

#include "pullin/errors.hpp"
#include "pullin/shooting.hpp"
#include "pullin/spectral.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace pullin {

namespace {

TransformResult checked_transform(const ProblemSpec& spec) {
    require(std::isfinite(spec.N) && spec.N >= 1.0, "N >= 1", "dimension must be at least 1");
    require(std::isfinite(spec.alpha) && spec.alpha > -2.0, "alpha > -2", "power-law exponent must exceed -2");
    auto t = dim_transform(spec.N, spec.alpha);
    require(t.N_eff >= 1.0, "N(alpha) >= 1", "transformed dimension 2(N+alpha)/(2+alpha) falls below 1");
    return t;
}

void check_tol(double tol) {
    require(std::isfinite(tol) && tol > 0.0 && tol < 1e-2, "0 < tol < 1e-2", "tolerance out of range");
}

double lambda_of(const ProblemSpec& spec, const TransformResult& t, double m, double tol) {
    return t.voltage_factor * shoot(spec.F, t.N_eff, m, tol).lambda;
}

// Maps the constant-profile solution w in dimension N(alpha) back to
// u(r) = w(r^k), k = 1 + alpha/2.
RadialSolution map_back(const Shot& shot, const TransformResult& t, double alpha) {
    RadialSolution w = to_unit_ball(shot);
    if (alpha == 0.0) return w;
    const double k = t.radius_map_exponent;
    const std::size_t n = w.size();
    std::vector<double> r(n), u(w.u().begin(), w.u().end()), du(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = std::pow(w.r()[i], 1.0 / k);
        du[i] = i == 0 ? 0.0 : w.du()[i] * k * std::pow(r[i], k - 1.0);
    }
    // u' ~ r^(1 + alpha) at the origin: finite but non-zero (or unbounded) for alpha <= -1.
    if (alpha <= -1.0 && n > 1) du[0] = du[1];
    r.back() = 1.0;
    return RadialSolution(std::move(r), std::move(u), std::move(du), t.voltage_factor * shot.lambda, t.N_eff);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](unsigned id) {
        for (std::size_t i = id; i < count; i += threads) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// Index of the first local maximum of lambda; on a plateau the smallest m.
std::ptrdiff_t first_local_max(const std::vector<BranchPoint>& pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(pts[i].lambda > pts[i - 1].lambda)) continue;
        std::size_t j = i;
        while (j + 1 < n && pts[j + 1].lambda == pts[i].lambda) ++j;
        if (j + 1 < n && pts[j + 1].lambda < pts[i].lambda) return static_cast<std::ptrdiff_t>(i);
        i = j;
    }
    return -1;
}

}  // namespace

MSchedule MSchedule::logspaced(double m_min, double m_max, std::size_t count) {
    require(m_min > 0.0 && m_max > m_min && count >= 2, "0 < m_min < m_max, count >= 2",
            "center-value schedule must be a non-empty increasing range of positive values");
    return MSchedule{logspace(m_min, m_max, count)};
}

MSchedule MSchedule::default_for(const Nonlinearity& F) {
    return F.is_singular() ? logspaced(1e-3, F.a_F() - 1e-4, 400) : logspaced(1e-3, 40.0, 400);
}

RadialSolution radial_solution(const ProblemSpec& spec, double m, double tol) {
    const auto t = checked_transform(spec);
    check_tol(tol);
    return map_back(shoot(spec.F, t.N_eff, m, tol), t, spec.alpha);
}

double branch_lambda(const ProblemSpec& spec, double m, double tol) {
    const auto t = checked_transform(spec);
    check_tol(tol);
    return lambda_of(spec, t, m, tol);
}

double branch_mu1(const ProblemSpec& spec, double m, double tol) {
    const auto t = checked_transform(spec);
    check_tol(tol);
    return mu1_at_center(spec.F, t.N_eff, m, tol);
}

Branch solve_branch(const ProblemSpec& spec, const MSchedule& schedule, const BranchOptions& options) {
    Branch b;
    b.spec = spec;
    b.transform = checked_transform(spec);
    check_tol(options.tol);
    const auto& ms = schedule.m;
    require(ms.size() >= 3, "at least 3 schedule points", "center-value schedule needs at least three points");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        require(std::isfinite(ms[i]) && ms[i] > 0.0 && ms[i] < spec.F.a_F(), "m in (0, a_F)",
                "schedule values must lie in (0, a_F)");
        require(i == 0 || ms[i] > ms[i - 1], "strictly increasing schedule", "schedule must be strictly increasing");
    }

    b.points.resize(ms.size());
    const auto t = b.transform;
    parallel_for(ms.size(), options.threads, [&](std::size_t i) {
        const Shot shot = shoot(spec.F, t.N_eff, ms[i], options.tol);
        BranchPoint& p = b.points[i];
        p.m = ms[i];
        p.lambda = t.voltage_factor * shot.lambda;
        if (options.compute_mu1) p.mu1 = mu1_at_center(spec.F, t.N_eff, ms[i], options.tol);
    });

    const auto top = std::max_element(b.points.begin(), b.points.end(),
                                      [](const BranchPoint& a, const BranchPoint& c) { return a.lambda < c.lambda; });
    b.lambda_star = top->lambda;
    b.m_star = top->m;

    const auto i = first_local_max(b.points);
    if (i < 0) return b;
    b.fold_found = true;
    b.lambda_star = b.points[i].lambda;
    b.m_star = b.points[i].m;
    if (options.refine_fold) {
        // Brent's method: parabolic steps through the three bracketing points,
        // golden-section fallback.
        const double lo = b.points[i - 1].m;
        const double hi = b.points[i + 1].m;
        auto neg = [&](double m) { return -lambda_of(spec, t, m, options.tol); };
        std::uintmax_t iters = 100;
        auto best = boost::math::tools::brent_find_minima(neg, lo, hi, 30, iters);
        if (-best.second >= b.lambda_star) {
            b.m_star = best.first;
            b.lambda_star = -best.second;
        }
    }
    if (options.compute_mu1) b.mu1_star = branch_mu1(spec, b.m_star, options.tol);
    return b;
}

Branch solve_branch(const ProblemSpec& spec, const BranchOptions& options) {
    return solve_branch(spec, MSchedule::default_for(spec.F), options);
}

RadialSolution minimal_solution(const ProblemSpec& spec, double lambda, const Branch& branch, double tol) {
    const auto t = checked_transform(spec);
    check_tol(tol);
    require(std::isfinite(lambda) && lambda > 0.0, "lambda > 0", "voltage must be positive");
    require(lambda < branch.lambda_star, "lambda < lambda*", "beyond pull-in: no minimal solution past lambda*");
    require(!branch.points.empty(), "non-empty branch", "branch has no points");

    // Stable part: points below the fold, closed off by the fold itself.
    std::vector<BranchPoint> stable;
    for (const auto& p : branch.points) {
        if (p.m < branch.m_star) stable.push_back(p);
    }
    stable.push_back({branch.m_star, branch.lambda_star});

    double m_lo = 0.0, m_hi = stable.front().m;
    for (std::size_t j = 0; j < stable.size(); ++j) {
        if (stable[j].lambda >= lambda) {
            m_hi = stable[j].m;
            m_lo = j == 0 ? 0.0 : stable[j - 1].m;
            break;
        }
    }
    auto g = [&](double m) { return lambda_of(spec, t, m, tol) - lambda; };
    if (m_lo == 0.0) {
        // lambda(m) ~ 2 N m / F(0) as m -> 0: shrink until the bracket closes.
        m_lo = m_hi;
        for (int k = 0; k < 60 && g(m_lo) > 0.0; ++k) m_lo *= 0.1;
    }
    double g_lo = g(m_lo);
    double g_hi = g(m_hi);
    if (g_lo > 0.0 || g_hi < 0.0) {
        throw ComputationError("minimal_solution: lambda(m) - lambda does not change sign on the stable segment");
    }
    double m = g_lo == 0.0 ? m_lo : m_hi;
    if (g_lo != 0.0 && g_hi != 0.0) {
        std::uintmax_t iters = 200;
        auto stop = [tol](double a, double c) { return std::abs(c - a) <= 1e-3 * tol * std::max(1.0, a); };
        auto root = boost::math::tools::toms748_solve(g, m_lo, m_hi, g_lo, g_hi, stop, iters);
        m = 0.5 * (root.first + root.second);
    }
    return map_back(shoot(spec.F, t.N_eff, m, tol), t, spec.alpha);
}

RadialProfile dudlambda(const ProblemSpec& spec, double lambda, double h, const Branch& branch,
                        std::span<const double> radii, double tol) {
    require(std::isfinite(h) && h > 0.0, "h > 0", "finite-difference step must be positive");
    require(lambda - h > 0.0 && lambda + h < branch.lambda_star, "0 < lambda - h, lambda + h < lambda*",
            "finite-difference stencil crosses 0 or the pull-in voltage");
    const auto lo = minimal_solution(spec, lambda - h, branch, tol);
    const auto hi = minimal_solution(spec, lambda + h, branch, tol);
    RadialProfile out;
    out.r.assign(radii.begin(), radii.end());
    for (double r : radii) out.values.push_back((hi.value(r) - lo.value(r)) / (2.0 * h));
    return out;
}

}  // namespace pullin
