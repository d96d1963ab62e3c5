#include "pullin/shooting.hpp"

#include "pullin/errors.hpp"
#include "pullin/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pullin {

namespace {

using State = std::array<double, 2>;

// Length scale on which the Taylor seed stays accurate: the radius where the
// quadratic drop F(m) s^(2+alpha) / ((2+alpha)(n+alpha)) reaches F/F', the
// distance over which F changes by a factor e.
double seed_length_scale(const Nonlinearity& F, double n, double alpha, double m) {
    const double f = F.value_unchecked(m);
    const double g = f / F.deriv_unchecked(m);
    return std::pow((2.0 + alpha) * (n + alpha) * g / f, 1.0 / (2.0 + alpha));
}

double radius_bound(double n, double alpha, double m) {
    // F >= 1 while v >= 0, so v(s) <= m - s^(2+alpha) / ((2+alpha)(n+alpha)).
    return std::pow((2.0 + alpha) * (n + alpha) * m, 1.0 / (2.0 + alpha));
}

Shot integrate_from_seed(const Nonlinearity& F, double n, double alpha, double m, double eps, double tol) {
    const double fm = F.value_unchecked(m);
    const double ka = 2.0 + alpha;
    const double kn = n + alpha;
    State y0{m - fm * std::pow(eps, ka) / (ka * kn), -fm * std::pow(eps, 1.0 + alpha) / kn};

    const double a_f = F.a_F();
    const bool weighted = alpha != 0.0;
    auto rhs = [&F, n, alpha, a_f, weighted](double s, const State& y, State& dy) {
        if (!(y[0] < a_f)) return false;
        const double w = weighted ? std::pow(s, alpha) : 1.0;
        dy[0] = y[1];
        dy[1] = -(n - 1.0) / s * y[1] - w * F.value_unchecked(y[0]);
        return true;
    };
    ode::StepControl ctl;
    ctl.rtol = tol;
    ctl.atol = tol * 1e-2;
    ctl.h_init = 0.1 * eps;
    auto solver = ode::make_dopri<2>(rhs, ctl);

    Shot shot;
    shot.m = m;
    shot.n = n;
    shot.alpha = alpha;
    shot.seed_radius = eps;
    shot.s.push_back(0.0);
    shot.v.push_back(m);
    // v'(0) = 0 unless the weight is too singular at the origin.
    shot.dv.push_back(alpha > -1.0 ? 0.0 : (alpha == -1.0 ? -fm / kn : y0[1]));

    auto observe = [&shot](double s, const State& y, const State&) {
        shot.s.push_back(s);
        shot.v.push_back(y[0]);
        shot.dv.push_back(y[1]);
    };
    auto event = [](double, const State& y) { return y[0]; };

    const double s_max = 1.5 * radius_bound(n, alpha, m) + 1e-3;
    auto out = solver.integrate(eps, y0, s_max, observe, event);
    if (!out.event_hit) {
        std::ostringstream os;
        os << "no-crossing: v stays positive up to s = " << s_max << " for m = " << m;
        throw ComputationError(os.str());
    }
    shot.radius = out.r;
    shot.v.back() = 0.0;
    shot.lambda = std::pow(shot.radius, ka);
    return shot;
}

Shot shoot_impl(const Nonlinearity& F, double n, double alpha, double m, const ShootOptions& opt) {
    require(std::isfinite(m) && m > 0.0 && m < F.a_F(), "0 < m < a_F", "center value m must lie in (0, a_F)");
    require(opt.tol > 0.0 && opt.tol < 1e-2, "0 < tol < 1e-2", "shooting tolerance out of range");

    double eps = std::min(1e-6 * std::max(1.0, radius_bound(n, alpha, m)),
                          1e-3 * seed_length_scale(F, n, alpha, m));
    Shot shot = integrate_from_seed(F, n, alpha, m, eps, opt.tol);
    if (!opt.refine_seed) return shot;
    for (int k = 0; k < opt.max_seed_halvings; ++k) {
        eps *= 0.5;
        Shot finer = integrate_from_seed(F, n, alpha, m, eps, opt.tol);
        const double change = std::abs(finer.lambda - shot.lambda);
        shot = std::move(finer);
        if (change < opt.tol * std::max(1.0, shot.lambda)) break;
    }
    return shot;
}

}  // namespace

Shot shoot(const Nonlinearity& F, double n_eff, double m, const ShootOptions& options) {
    require(std::isfinite(n_eff) && n_eff >= 1.0, "N_eff >= 1", "shooting dimension must be at least 1");
    return shoot_impl(F, n_eff, 0.0, m, options);
}

Shot shoot(const Nonlinearity& F, double n_eff, double m, double tol) {
    ShootOptions opt;
    opt.tol = tol;
    return shoot(F, n_eff, m, opt);
}

Shot shoot_weighted(const Nonlinearity& F, double n, double alpha, double m, const ShootOptions& options) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    require(alpha > -2.0, "alpha > -2", "power-law exponent must exceed -2");
    require(n + alpha > 0.0, "N + alpha > 0", "weight |x|^alpha must be integrable on the ball");
    return shoot_impl(F, n, alpha, m, options);
}

RadialSolution to_unit_ball(const Shot& shot) {
    const std::size_t k = shot.s.size();
    std::vector<double> r(k), u(k), du(k);
    for (std::size_t i = 0; i < k; ++i) {
        r[i] = shot.s[i] / shot.radius;
        u[i] = shot.v[i];
        du[i] = shot.dv[i] * shot.radius;
    }
    r.back() = 1.0;
    return RadialSolution(std::move(r), std::move(u), std::move(du), shot.lambda, shot.n);
}

}  // namespace pullin
