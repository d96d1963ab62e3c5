#pragma once

// Independent reference computations used only by the tests. Deliberately
// crude and self-contained: grids, adaptive Simpson, power series, bisection,
// finite differences. Nothing here calls into the library.

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

/// Bisection for a sign change of f on [a, b].
inline double bisect(const Fn& f, double a, double b, double tol = 1e-15) {
    double fa = f(a);
    for (int i = 0; i < 200 && b - a > tol * std::max(1.0, std::abs(a)); ++i) {
        const double c = 0.5 * (a + b);
        const double fc = f(c);
        if ((fc > 0.0) == (fa > 0.0)) {
            a = c;
            fa = fc;
        } else {
            b = c;
        }
    }
    return 0.5 * (a + b);
}

/// sup of f on (a, b): uniform scan, then repeated zoom around the best node.
inline double grid_sup(const Fn& f, double a, double b, int n = 20001, int zooms = 6) {
    double best = -std::numeric_limits<double>::infinity();
    double best_x = a;
    for (int z = 0; z <= zooms; ++z) {
        const double h = (b - a) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = a + h * i;
            const double v = f(x);
            if (std::isfinite(v) && v > best) {
                best = v;
                best_x = x;
            }
        }
        const double lo = std::max(a, best_x - 2 * h);
        const double hi = std::min(b, best_x + 2 * h);
        a = lo;
        b = hi;
    }
    return best;
}

/// min of f over n equally spaced interior points of (a, b).
struct Scan {
    double x;
    double value;
};
inline Scan grid_scan_min(const Fn& f, double a, double b, int n = 100000) {
    Scan s{a, std::numeric_limits<double>::infinity()};
    for (int i = 1; i <= n; ++i) {
        const double x = a + (b - a) * i / (n + 1.0);
        const double v = f(x);
        if (std::isfinite(v) && v < s.value) s = {x, v};
    }
    return s;
}

namespace detail {
inline double simpson_step(const Fn& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                           int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature on [a, b].
inline double simpson(const Fn& f, double a, double b, double tol = 1e-12, int depth = 50) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// J_0 by its power series (accurate for |x| < 8).
inline double bessel_j0(double x) {
    double term = 1.0, sum = 1.0;
    const double q = x * x / 4.0;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

inline double bessel_j0_first_zero() { return bisect(bessel_j0, 2.0, 3.0); }

/// -u'' = lambda e^u on (-1, 1), u(+-1) = 0: u = 2 ln(cosh(theta)/cosh(theta x)),
/// lambda = 2 theta^2 / cosh^2(theta); the fold is at theta tanh(theta) = 1.
struct BratuFold {
    double lambda_star;
    double m_star;
};
inline BratuFold bratu_1d_fold() {
    const double th = bisect([](double t) { return t * std::tanh(t) - 1.0; }, 0.5, 2.0);
    const double c = std::cosh(th);
    return {2.0 * th * th / (c * c), 2.0 * std::log(c)};
}

/// Whether -u'' = lambda e^u on (-1, 1) has a solution, by monotone iteration
/// from u = 0 on a uniform second-order finite-difference grid. Symmetry lets
/// us solve on [0, 1] with u'(0) = 0.
inline bool bratu_fd_solvable(double lambda, int n = 400) {
    const double h = 1.0 / n;
    std::vector<double> u(n + 1, 0.0), rhs(n + 1), c(n + 1), d(n + 1);
    for (int it = 0; it < 200000; ++it) {
        // Rows 0..n-1; u_n = 0. Row 0 uses the ghost point u_{-1} = u_1.
        for (int i = 0; i < n; ++i) rhs[i] = lambda * std::exp(u[i]) * h * h;
        // Tridiagonal (-1, 2, -1) with row 0 = (2, -2): Thomas algorithm.
        c[0] = -2.0 / 2.0;
        d[0] = rhs[0] / 2.0;
        for (int i = 1; i < n; ++i) {
            const double denom = 2.0 + c[i - 1];
            c[i] = -1.0 / denom;
            d[i] = (rhs[i] + d[i - 1]) / denom;
        }
        std::vector<double> next(n + 1, 0.0);
        next[n - 1] = d[n - 1];
        for (int i = n - 2; i >= 0; --i) next[i] = d[i] - c[i] * next[i + 1];
        double change = 0.0;
        for (int i = 0; i <= n; ++i) change = std::max(change, std::abs(next[i] - u[i]));
        u = std::move(next);
        if (!(u[0] < 50.0)) return false;
        if (change < 1e-13) return true;
    }
    return false;
}

/// Bisection on lambda between solvable and unsolvable voltages.
inline double bratu_fd_lambda_star(int n = 400) {
    double lo = 0.5, hi = 1.2;
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bratu_fd_solvable(mid, n) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Lambda(p, R) = int_0^R (-ln r)^p r dr = Gamma(p + 1, -2 ln R) / 2^(p+1).
inline double lambda_p_R_gamma(double p, double R) {
    return boost::math::tgamma(p + 1.0, -2.0 * std::log(R)) / std::pow(2.0, p + 1.0);
}

/// Integer p: Lambda(p, R) = R^2/2 (-ln R)^p + (p/2) Lambda(p-1, R), Lambda(0, R) = R^2/2.
inline double lambda_p_R_recursion(int p, double R) {
    double v = 0.5 * R * R;
    for (int k = 1; k <= p; ++k) v = 0.5 * R * R * std::pow(-std::log(R), k) + 0.5 * k * v;
    return v;
}

/// int_0^1 R^(N-1) / (a + C R^k)^q dR in closed form through the incomplete
/// beta function (w = C s / (a + C s), s = R^k); needs q > N/k.
inline double radial_integral_beta(double a, double C, double n, double k, double q) {
    const double b = n / k;
    const double x = C / (a + C);
    return std::pow(a, b - q) * std::pow(C, -b) * boost::math::beta(b, q - b, x) / k;
}

/// Fourth-order central differences.
inline double d1(const Fn& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}
inline double d2(const Fn& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

/// -u'' - (N-1)/r u' - rhs(r, u) by finite differences of u.
inline double radial_residual_fd(const Fn& u, double n, double r, const std::function<double(double, double)>& rhs,
                                 double h) {
    return -d2(u, r, h) - (n - 1.0) / r * d1(u, r, h) - rhs(r, u(r));
}

}  // namespace oracle
