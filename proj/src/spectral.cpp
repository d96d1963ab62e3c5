#include "pullin/spectral.hpp"

#include "pullin/errors.hpp"
#include "pullin/ode.hpp"
#include "pullin/shooting.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pullin {

namespace {

constexpr double kPi = std::numbers::pi;

// Seed radius for the removable singularity at r = 0, sized against both the
// oscillation scale 1/sqrt|mu - q(0)| and the unit radius.
double seed_radius(double n, double mu_minus_q0) {
    const double k = std::sqrt(std::abs(mu_minus_q0) / n + 1.0);
    return 1e-6 / k;
}

ode::StepControl control_for(double tol) {
    ode::StepControl ctl;
    ctl.rtol = std::min(tol, 1e-10);
    ctl.atol = ctl.rtol * 1e-2;
    return ctl;
}

void check_dimension(double n) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
}

struct Profile {
    std::vector<double> r, psi, dpsi;
    double i0 = 0.0;
    double ia = 0.0;
};

// Direct integration of psi with the two moments int r^(N-1) psi and
// int r^(N-1+alpha) psi carried along; psi(0) = 1.
Profile integrate_profile(double n, const RadialPotential& q, double mu, double alpha, double tol) {
    const double q0 = q(0.0);
    const double eps = seed_radius(n, mu - q0);
    const double c = (q0 - mu) / n;
    using S = std::array<double, 4>;
    S y0{1.0 + 0.5 * c * eps * eps, c * eps, std::pow(eps, n) / n, std::pow(eps, n + alpha) / (n + alpha)};
    auto rhs = [&q, n, mu, alpha](double r, const S& y, S& dy) {
        dy[0] = y[1];
        dy[1] = -(n - 1.0) / r * y[1] + (q(r) - mu) * y[0];
        const double w = std::pow(r, n - 1.0);
        dy[2] = w * y[0];
        dy[3] = (alpha == 0.0 ? w : std::pow(r, n - 1.0 + alpha)) * y[0];
        return true;
    };
    auto ctl = control_for(tol);
    ctl.h_init = 0.1 * eps;
    auto solver = ode::make_dopri<4>(rhs, ctl);
    Profile p;
    p.r.push_back(0.0);
    p.psi.push_back(1.0);
    p.dpsi.push_back(0.0);
    auto out = solver.integrate(eps, y0, 1.0, [&p](double r, const S& y, const S&) {
        p.r.push_back(r);
        p.psi.push_back(y[0]);
        p.dpsi.push_back(y[1]);
    });
    p.i0 = out.y[2];
    p.ia = out.y[3];
    return p;
}

}  // namespace

double prufer_angle(double n, const RadialPotential& q, double mu, double tol) {
    check_dimension(n);
    const double q0 = q(0.0);
    const double eps = seed_radius(n, mu - q0);
    // psi ~ 1 + (q0 - mu) r^2 / (2N), psi' ~ (q0 - mu) r / N near the origin.
    const double psi = 1.0 + 0.5 * (q0 - mu) / n * eps * eps;
    const double dpsi = (q0 - mu) / n * eps;
    using S = std::array<double, 1>;
    S y0{std::atan2(psi, dpsi)};
    auto rhs = [&q, n, mu](double r, const S& y, S& dy) {
        const double s = std::sin(y[0]);
        const double c = std::cos(y[0]);
        dy[0] = c * c + (n - 1.0) / r * s * c - (q(r) - mu) * s * s;
        return true;
    };
    auto ctl = control_for(tol);
    ctl.h_init = 0.1 * eps;
    auto solver = ode::make_dopri<1>(rhs, ctl);
    auto out = solver.integrate(eps, y0, 1.0, [](double, const S&, const S&) {});
    return out.y[0];
}

int zero_count(double n, const RadialPotential& q, double mu, double tol) {
    const double theta = prufer_angle(n, q, mu, tol);
    return std::max(0, static_cast<int>(std::floor(theta / kPi)));
}

namespace {

// Solves g(mu) = theta(1; mu) - pi = 0 for increasing g, widening [lo, hi]
// geometrically until it brackets the root.
template <class G>
double bracket_and_solve(G&& g, double lo, double hi, double tol) {
    require(lo < hi, "lo < hi", "eigenvalue bracket must be ordered");
    double glo = g(lo);
    double ghi = g(hi);
    for (int k = 0; k < 60 && glo > 0.0; ++k) {
        const double w = hi - lo;
        hi = lo;
        ghi = glo;
        lo -= 2.0 * w;
        glo = g(lo);
    }
    for (int k = 0; k < 60 && ghi < 0.0; ++k) {
        const double w = hi - lo;
        lo = hi;
        glo = ghi;
        hi += 2.0 * w;
        ghi = g(hi);
    }
    if (!(glo <= 0.0 && ghi >= 0.0)) {
        throw ComputationError("eigenvalue bracket failure: theta(1) - pi does not change sign");
    }
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    std::uintmax_t iters = 200;
    auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol * std::max(1.0, std::abs(a)); };
    auto root = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, stop, iters);
    return 0.5 * (root.first + root.second);
}

// Once psi has been exponentially dominated by its growing mode for 40
// e-folds, theta sits at the attracting angle and its position relative to the
// repelling one, pi - atan(1/kappa), fixes the sign of theta(1) - pi. Stopping
// there changes the eigenvalue by O(e^-80) and avoids the stiff tail.
constexpr double kCommitted = 40.0;

double truncated_residual(double theta, double kappa2) {
    const double kappa = std::sqrt(std::max(kappa2, 1e-300));
    return theta - (kPi - std::atan(1.0 / kappa));
}

double angle_residual(double n, const RadialPotential& q, double mu, double tol) {
    const double q0 = q(0.0);
    const double eps = seed_radius(n, mu - q0);
    const double psi = 1.0 + 0.5 * (q0 - mu) / n * eps * eps;
    const double dpsi = (q0 - mu) / n * eps;
    using S = std::array<double, 2>;
    S y0{std::atan2(psi, dpsi), 0.0};
    auto rhs = [&q, n, mu](double r, const S& y, S& dy) {
        const double s = std::sin(y[0]);
        const double c = std::cos(y[0]);
        const double k2 = q(r) - mu;
        dy[0] = c * c + (n - 1.0) / r * s * c - k2 * s * s;
        dy[1] = std::sqrt(std::max(0.0, k2));
        return true;
    };
    auto ctl = control_for(tol);
    ctl.h_init = 0.1 * eps;
    auto solver = ode::make_dopri<2>(rhs, ctl);
    auto out = solver.integrate(eps, y0, 1.0, [](double, const S&, const S&) {},
                                [](double, const S& y) { return kCommitted - y[1]; });
    if (out.event_hit) return truncated_residual(out.y[0], q(out.r) - mu);
    return out.y[0] - kPi;
}

}  // namespace

double principal_eigenvalue(double n, const RadialPotential& q, double lo, double hi, double tol) {
    check_dimension(n);
    return bracket_and_solve([&](double mu) { return angle_residual(n, q, mu, tol); }, lo, hi, tol);
}

EigenPair lambda1_ball(double n, double tol) {
    check_dimension(n);
    require(tol > 0.0 && tol < 1e-2, "0 < tol < 1e-2", "eigenvalue tolerance out of range");
    const RadialPotential zero = [](double) { return 0.0; };
    EigenPair e;
    e.eigenvalue = principal_eigenvalue(n, zero, 1.0, 4.0 * n * n, tol);
    Profile p = integrate_profile(n, zero, e.eigenvalue, 0.0, tol);
    e.r = std::move(p.r);
    e.psi = std::move(p.psi);
    e.dpsi = std::move(p.dpsi);
    e.mass = p.i0;
    const double sphere = 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
    e.normalization = 1.0 / (sphere * e.mass);
    return e;
}

double profile_weight_ratio(double n, double alpha, double tol) {
    check_dimension(n);
    require(alpha > -2.0, "alpha > -2", "power-law exponent must exceed -2");
    require(n + alpha > 0.0, "N + alpha > 0", "weight |x|^alpha must be integrable against phi");
    if (alpha == 0.0) return 1.0;
    const RadialPotential zero = [](double) { return 0.0; };
    const double mu = principal_eigenvalue(n, zero, 1.0, 4.0 * n * n, tol);
    Profile p = integrate_profile(n, zero, mu, alpha, tol);
    const double ratio = p.ia / p.i0;
    if (!std::isfinite(ratio) || ratio < 0.0) {
        throw ComputationError("eigenfunction quadrature did not converge");
    }
    return ratio;
}

double mu1(double n, const Nonlinearity& F, double lambda, const RadialSolution& u, double tol) {
    check_dimension(n);
    require(lambda >= 0.0 && std::isfinite(lambda), "lambda >= 0", "voltage must be finite and non-negative");
    require(u.size() >= 2, "valid radial solution", "radial solution has no samples");
    require(u.m() < F.a_F(), "u < a_F", "radial solution reaches the singularity");
    const RadialPotential q = [&](double r) { return -lambda * F.deriv_unchecked(u.value(std::clamp(r, 0.0, 1.0))); };
    // F' is largest at the centre and pi^2/4 <= lambda_1 <= 4N^2, so the
    // eigenvalue lies in [pi^2/4 - lambda F'(m), 4N^2 - lambda F'(0)].
    const double lo = kPi * kPi / 4.0 - lambda * F.deriv_unchecked(u.m());
    const double hi = 4.0 * n * n - lambda * F.deriv_unchecked(0.0);
    return principal_eigenvalue(n, q, lo, hi, tol);
}

double mu1_at_center(const Nonlinearity& F, double n, double m, double tol) {
    check_dimension(n);
    const Shot shot = shoot(F, n, m, tol);
    const double R = shot.radius;
    const double eps = shot.seed_radius;
    const double fm = F.value_unchecked(m);
    const double q0 = -F.deriv_unchecked(m);
    const double a_f = F.a_F();
    using S = std::array<double, 4>;
    // In s = R r the eigenproblem reads -psi'' - (N-1)/s psi' - F'(v) psi = (mu/R^2) psi on (0, R).
    auto theta_end = [&](double nu) {
        const double psi = 1.0 + 0.5 * (q0 - nu) / n * eps * eps;
        const double dpsi = (q0 - nu) / n * eps;
        S y0{m - fm * eps * eps / (2.0 * n), -fm * eps / n, std::atan2(psi, dpsi), 0.0};
        auto rhs = [&F, n, nu, a_f](double s, const S& y, S& dy) {
            if (!(y[0] < a_f)) return false;
            dy[0] = y[1];
            dy[1] = -(n - 1.0) / s * y[1] - F.value_unchecked(y[0]);
            const double sn = std::sin(y[2]);
            const double cs = std::cos(y[2]);
            const double k2 = -F.deriv_unchecked(y[0]) - nu;
            dy[2] = cs * cs + (n - 1.0) / s * sn * cs - k2 * sn * sn;
            dy[3] = std::sqrt(std::max(0.0, k2));
            return true;
        };
        auto ctl = control_for(tol);
        ctl.h_init = 0.1 * eps;
        auto solver = ode::make_dopri<4>(rhs, ctl);
        auto out = solver.integrate(eps, y0, R, [](double, const S&, const S&) {},
                                    [](double, const S& y) { return kCommitted - y[3]; });
        if (out.event_hit) return truncated_residual(out.y[2], -F.deriv_unchecked(out.y[0]) - nu);
        return out.y[2] - kPi;
    };
    const double lo = kPi * kPi / (4.0 * R * R) + q0;
    const double hi = 4.0 * n * n / (R * R) - F.deriv_unchecked(0.0);
    const double nu = bracket_and_solve(theta_end, lo, hi, tol);
    return nu * R * R;
}

}  // namespace pullin
