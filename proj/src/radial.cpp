#include "pullin/radial.hpp"

#include "pullin/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pullin {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> dy)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(dy)) {
    require(x_.size() == y_.size() && x_.size() == d_.size() && x_.size() >= 2, "matching samples",
            "interpolant needs at least two nodes with values and slopes");
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        require(x_[i + 1] > x_[i], "strictly increasing nodes", "interpolation nodes must be strictly increasing");
    }
    // Fritsch-Carlson: shrink slopes whose ratio to the secant leaves the
    // monotonicity region alpha^2 + beta^2 <= 9.
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        const double delta = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        if (delta == 0.0) {
            d_[i] = 0.0;
            d_[i + 1] = 0.0;
            continue;
        }
        double a = d_[i] / delta;
        double b = d_[i + 1] / delta;
        if (a < 0.0) {
            d_[i] = 0.0;
            a = 0.0;
        }
        if (b < 0.0) {
            d_[i + 1] = 0.0;
            b = 0.0;
        }
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            d_[i] = tau * a * delta;
            d_[i + 1] = tau * b * delta;
        }
    }
}

std::size_t MonotoneCubic::segment(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    if (it == x_.begin()) return 0;
    const auto k = static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(k, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[k] + h10 * h * d_[k] + h01 * y_[k + 1] + h11 * h * d_[k + 1];
}

double MonotoneCubic::derivative(double x) const {
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    const double t2 = t * t;
    const double g00 = 6 * t2 - 6 * t;
    const double g10 = 3 * t2 - 4 * t + 1;
    const double g01 = -6 * t2 + 6 * t;
    const double g11 = 3 * t2 - 2 * t;
    return (g00 * y_[k] + g01 * y_[k + 1]) / h + g10 * d_[k] + g11 * d_[k + 1];
}

RadialSolution::RadialSolution(std::vector<double> r, std::vector<double> u, std::vector<double> du, double lambda,
                               double n_eff)
    : interp_(std::move(r), std::move(u), std::move(du)), lambda_(lambda), n_eff_(n_eff) {
    m_ = interp_.y().front();
}

double RadialSolution::value(double r) const {
    require(r >= 0.0 && r <= 1.0, "0 <= r <= 1", "radial solution sampled outside [0, 1]");
    return interp_(r);
}

double RadialSolution::slope(double r) const {
    require(r >= 0.0 && r <= 1.0, "0 <= r <= 1", "radial solution sampled outside [0, 1]");
    return interp_.derivative(r);
}

RadialProfile RadialSolution::sample(std::span<const double> radii) const {
    RadialProfile out;
    out.r.assign(radii.begin(), radii.end());
    out.values.reserve(radii.size());
    for (double r : radii) out.values.push_back(value(r));
    return out;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = a;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.back() = b;
    return out;
}

std::vector<double> logspace(double a, double b, std::size_t n) {
    require(a > 0.0 && b > 0.0, "positive endpoints", "logspace needs positive endpoints");
    auto e = linspace(std::log(a), std::log(b), n);
    for (auto& v : e) v = std::exp(v);
    if (n > 0) {
        e.front() = a;
        e.back() = b;
    }
    return e;
}

}  // namespace pullin
