#include "pullin/powerlaw.hpp"

#include "pullin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pullin {

namespace {

void check_n_alpha(double n, double alpha) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    require(std::isfinite(alpha) && alpha > -2.0, "alpha > -2", "power-law exponent must exceed -2");
}

void check_radius(double r) {
    require(r > 0.0 && r <= 1.0, "0 < r <= 1", "closed-form profile evaluated outside (0, 1]");
}

}  // namespace

double mems_critical_dimension() { return (14.0 + 4.0 * std::sqrt(6.0)) / 3.0; }

TransformResult dim_transform(double n, double alpha) {
    check_n_alpha(n, alpha);
    TransformResult t;
    t.radius_map_exponent = 1.0 + 0.5 * alpha;
    t.voltage_factor = t.radius_map_exponent * t.radius_map_exponent;
    t.N_eff = 2.0 * (n + alpha) / (2.0 + alpha);
    if (alpha == 0.0) t.N_eff = n;
    return t;
}

double alpha_critical_mems(double n) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    const double s6 = std::sqrt(6.0);
    return (3.0 * n - 14.0 - 4.0 * s6) / (4.0 + 2.0 * s6);
}

Regularity classify_regularity(const Nonlinearity& F, double n, double alpha) {
    const double n_eff = dim_transform(n, alpha).N_eff;
    switch (F.family()) {
        case Family::MemsInversePower:
            require_mems_p2(F, "classify_regularity");
            return n_eff < mems_critical_dimension() ? Regularity::Classical : Regularity::Singular;
        case Family::Exponential:
            return n_eff < 10.0 ? Regularity::Classical : Regularity::Singular;
        case Family::PowerGrowth:
            require(n_eff < 10.0, "N(alpha) < 10",
                    "regularity of the power-growth extremal is only decided for N(alpha) < 10");
            return Regularity::Classical;
    }
    return Regularity::Classical;
}

double SingularExtremal::value(double r) const {
    check_radius(r);
    if (F_.family() == Family::Exponential) return -2.0 * std::log(r);
    return 1.0 - std::pow(r, (2.0 + alpha_) / 3.0);
}

double SingularExtremal::slope(double r) const {
    check_radius(r);
    if (F_.family() == Family::Exponential) return -2.0 / r;
    const double k = (2.0 + alpha_) / 3.0;
    return -k * std::pow(r, k - 1.0);
}

double SingularExtremal::curvature(double r) const {
    check_radius(r);
    if (F_.family() == Family::Exponential) return 2.0 / (r * r);
    const double k = (2.0 + alpha_) / 3.0;
    return -k * (k - 1.0) * std::pow(r, k - 2.0);
}

double SingularExtremal::residual(double r) const {
    const double u = value(r);
    const double weight = alpha_ == 0.0 ? 1.0 : std::pow(r, alpha_);
    return -curvature(r) - (n_ - 1.0) / r * slope(r) - lambda_star_ * weight * eval(F_, u);
}

SingularExtremal singular_extremal(const Nonlinearity& F, double n, double alpha) {
    check_n_alpha(n, alpha);
    switch (F.family()) {
        case Family::MemsInversePower:
            require_mems_p2(F, "singular_extremal");
            require(classify_regularity(F, n, alpha) == Regularity::Singular, "N(alpha) >= (14+4 sqrt 6)/3",
                    "MEMS extremal is classical in this regime; no explicit singular extremal");
            return SingularExtremal(F, n, alpha, (2.0 + alpha) * (3.0 * n + alpha - 4.0) / 9.0);
        case Family::Exponential:
            require(alpha == 0.0, "alpha = 0", "explicit exponential extremal is only available for alpha = 0");
            require(n >= 10.0, "N >= 10", "exponential extremal is classical for N < 10");
            return SingularExtremal(F, n, alpha, 2.0 * n - 4.0);
        case Family::PowerGrowth:
            break;
    }
    throw DomainError("F in {exp, mems(p=2)}", "no explicit singular extremal for the power-growth family");
}

double Vstar::value(double r) const {
    check_radius(r);
    return amplitude_ * (std::pow(r, exponent_) - std::pow(r, shift_));
}

double Vstar::slope(double r) const {
    check_radius(r);
    const double s = shift_ == 0.0 ? 0.0 : shift_ * std::pow(r, shift_ - 1.0);
    return amplitude_ * (exponent_ * std::pow(r, exponent_ - 1.0) - s);
}

double Vstar::curvature(double r) const {
    check_radius(r);
    const double s = shift_ == 0.0 ? 0.0 : shift_ * (shift_ - 1.0) * std::pow(r, shift_ - 2.0);
    return amplitude_ * (exponent_ * (exponent_ - 1.0) * std::pow(r, exponent_ - 2.0) - s);
}

double Vstar::residual(double r) const {
    const auto ext = singular_extremal(F_, n_, 0.0);
    const double u = ext.value(r);
    return -curvature(r) - (n_ - 1.0) / r * slope(r) - eval(F_, u) -
           ext.lambda_star() * eval_deriv(F_, u) * value(r);
}

Vstar vstar(const Nonlinearity& F, double n, VstarForm form) {
    require(std::isfinite(n) && n >= 1.0, "N >= 1", "dimension must be at least 1");
    if (F.family() == Family::Exponential) {
        require(n >= 10.0, "N >= 10", "v* needs the singular exponential extremal (N >= 10)");
        const double disc = std::max(0.0, n * n - 12.0 * n + 20.0);
        return Vstar(F, n, 1.0 / (2.0 * n - 4.0), -0.5 * n + 1.0 + 0.5 * std::sqrt(disc), 0.0);
    }
    if (F.family() == Family::MemsInversePower) {
        require_mems_p2(F, "vstar");
        require(n >= mems_critical_dimension(), "N >= (14+4 sqrt 6)/3",
                "v* needs the singular MEMS extremal (N >= 7.93)");
        const double disc = std::max(0.0, 9.0 * n * n - 84.0 * n + 100.0);
        const double shift = form == VstarForm::Derived ? 2.0 / 3.0 : 0.0;
        return Vstar(F, n, 3.0 / (6.0 * n - 8.0), -0.5 * n + 1.0 + std::sqrt(disc) / 6.0, shift);
    }
    throw DomainError("F in {exp, mems(p=2)}", "v* is not available for the power-growth family");
}

double Envelopes::lower(double r) const {
    return std::max(0.0, ext_.value(r) - (ext_.lambda_star() - lambda_) * v_.value(r));
}

double Envelopes::upper(double r) const {
    const double ls = ext_.lambda_star();
    if (ext_.F().family() == Family::Exponential) {
        check_radius(r);
        return std::log(ls / (ls - lambda_ + lambda_ * r * r));
    }
    return std::cbrt(lambda_ / ls) * ext_.value(r);
}

RadialProfile Envelopes::sample_lower(std::span<const double> radii) const {
    RadialProfile p;
    p.r.assign(radii.begin(), radii.end());
    for (double r : radii) p.values.push_back(lower(r));
    return p;
}

RadialProfile Envelopes::sample_upper(std::span<const double> radii) const {
    RadialProfile p;
    p.r.assign(radii.begin(), radii.end());
    for (double r : radii) p.values.push_back(upper(r));
    return p;
}

Envelopes asymptotic_envelopes(const Nonlinearity& F, double n, double lambda, VstarForm form) {
    auto ext = singular_extremal(F, n, 0.0);
    auto v = vstar(F, n, form);
    require(std::isfinite(lambda) && lambda > 0.0 && lambda < ext.lambda_star(), "0 < lambda < lambda*",
            "envelopes are defined for voltages strictly below the pull-in voltage");
    return Envelopes(ext, v, lambda);
}

}  // namespace pullin
