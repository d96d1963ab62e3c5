#pragma once

#include <span>
#include <vector>

namespace pullin {

/// Piecewise cubic Hermite interpolant with nodal slopes limited
/// (Fritsch-Carlson) so that monotone data stay monotone between nodes.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> dy);

    double operator()(double x) const;
    double derivative(double x) const;

    std::span<const double> x() const noexcept { return x_; }
    std::span<const double> y() const noexcept { return y_; }
    std::span<const double> dy() const noexcept { return d_; }
    bool empty() const noexcept { return x_.empty(); }

private:
    std::size_t segment(double x) const;

    std::vector<double> x_, y_, d_;
};

/// A sampled radial function on [0, 1] (e.g. a finite-difference derivative
/// in lambda or an eigenfunction).
struct RadialProfile {
    std::vector<double> r;
    std::vector<double> values;
};

/// Radial solution u(r) of -u'' - (N-1)/r u' = lambda f(r) F(u) on the unit
/// ball, u'(0) = 0, u(1) = 0. The samples are the accepted integrator nodes;
/// between nodes u is reconstructed by monotone cubic Hermite interpolation.
class RadialSolution {
public:
    RadialSolution() = default;
    RadialSolution(std::vector<double> r, std::vector<double> u, std::vector<double> du, double lambda,
                   double n_eff);

    double m() const noexcept { return m_; }
    double lambda() const noexcept { return lambda_; }
    double n_eff() const noexcept { return n_eff_; }

    std::span<const double> r() const noexcept { return interp_.x(); }
    std::span<const double> u() const noexcept { return interp_.y(); }
    std::span<const double> du() const noexcept { return interp_.dy(); }
    std::size_t size() const noexcept { return interp_.x().size(); }

    /// u at radius r in [0, 1]; throws DomainError outside.
    double value(double r) const;
    double slope(double r) const;

    /// Samples u on the given radii.
    RadialProfile sample(std::span<const double> radii) const;

private:
    MonotoneCubic interp_;
    double m_ = 0.0;
    double lambda_ = 0.0;
    double n_eff_ = 0.0;
};

std::vector<double> linspace(double a, double b, std::size_t n);
std::vector<double> logspace(double a, double b, std::size_t n);

}  // namespace pullin
