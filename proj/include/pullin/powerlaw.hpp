#pragma once

#include "pullin/nonlinearity.hpp"
#include "pullin/radial.hpp"

#include <span>

namespace pullin {

/// Dimension at and above which the MEMS (p = 2) extremal on the unit ball is
/// singular: N(alpha) >= (14 + 4 sqrt 6) / 3 = 7.93...
double mems_critical_dimension();

/// The radial change of variables u(r) = w(r^(1 + alpha/2)) turning
/// -Delta u = lambda |x|^alpha F(u) in dimension N into the constant-profile
/// problem in dimension N(alpha) = 2(N + alpha)/(2 + alpha) with voltage
/// lambda / (1 + alpha/2)^2.
struct TransformResult {
    double N_eff = 0.0;
    double voltage_factor = 1.0;       ///< (1 + alpha/2)^2
    double radius_map_exponent = 1.0;  ///< 1 + alpha/2
};

TransformResult dim_transform(double n, double alpha);

/// (3N - 14 - 4 sqrt 6) / (4 + 2 sqrt 6): for N >= 8 the MEMS extremal is
/// singular exactly when alpha <= alpha_N.
double alpha_critical_mems(double n);

enum class Regularity { Classical, Singular };

/// Classical iff N(alpha) is below the family's critical dimension:
/// (14 + 4 sqrt 6)/3 for MEMS (p = 2 only), 10 for the exponential. For power
/// growth only N(alpha) < 10 is decided (classical); larger N(alpha) throws.
Regularity classify_regularity(const Nonlinearity& F, double n, double alpha);

/// Explicit singular extremal on the unit ball.
///   MEMS:        u*(r) = 1 - r^((2+alpha)/3),  lambda* = (2+alpha)(3N+alpha-4)/9
///   exponential: u*(r) = -2 ln r,             lambda* = 2N - 4   (alpha = 0)
class SingularExtremal {
public:
    SingularExtremal(const Nonlinearity& F, double n, double alpha, double lambda_star)
        : F_(F), n_(n), alpha_(alpha), lambda_star_(lambda_star) {}

    const Nonlinearity& F() const noexcept { return F_; }
    double n() const noexcept { return n_; }
    double alpha() const noexcept { return alpha_; }
    double lambda_star() const noexcept { return lambda_star_; }

    double value(double r) const;
    double slope(double r) const;
    double curvature(double r) const;

    /// -u'' - (N-1)/r u' - lambda* r^alpha F(u), the radial ODE residual.
    double residual(double r) const;

private:
    Nonlinearity F_;
    double n_, alpha_, lambda_star_;
};

SingularExtremal singular_extremal(const Nonlinearity& F, double n, double alpha);

enum class VstarForm {
    Derived,    ///< solves (Q_lambda*) exactly: MEMS 3/(6N-8) (r^e - r^(2/3))
    AsPrinted,  ///< the MEMS variant with r^(2/3) replaced by 1
};

/// v* = d u_lambda / d lambda at lambda*, for the singular extremals at
/// alpha = 0: A (r^e - r^s) with e the larger root of the indicial equation.
///   exponential (N >= 10): A = 1/(2N-4), s = 0
///   MEMS (N >= 7.93...):   A = 3/(6N-8), s = 2/3
class Vstar {
public:
    Vstar(const Nonlinearity& F, double n, double amplitude, double exponent, double shift)
        : F_(F), n_(n), amplitude_(amplitude), exponent_(exponent), shift_(shift) {}

    double amplitude() const noexcept { return amplitude_; }
    double exponent() const noexcept { return exponent_; }
    double value(double r) const;
    double slope(double r) const;
    double curvature(double r) const;

    /// -v'' - (N-1)/r v' - F(u*) - lambda* F'(u*) v.
    double residual(double r) const;

private:
    Nonlinearity F_;
    double n_, amplitude_, exponent_, shift_;
};

Vstar vstar(const Nonlinearity& F, double n, VstarForm form = VstarForm::Derived);

/// Two-sided bounds on the minimal solution u_lambda on the unit ball near a
/// singular extremal:
///   lower = max(0, u* - (lambda* - lambda) v*)
///   upper = (lambda/lambda*)^(1/3) u*                  (MEMS)
///         = ln(lambda* / (lambda* - lambda + lambda r^2))  (exponential)
class Envelopes {
public:
    Envelopes(SingularExtremal ext, Vstar v, double lambda) : ext_(ext), v_(v), lambda_(lambda) {}

    double lambda() const noexcept { return lambda_; }
    double lambda_star() const noexcept { return ext_.lambda_star(); }
    double lower(double r) const;
    double upper(double r) const;
    RadialProfile sample_lower(std::span<const double> radii) const;
    RadialProfile sample_upper(std::span<const double> radii) const;

private:
    SingularExtremal ext_;
    Vstar v_;
    double lambda_;
};

Envelopes asymptotic_envelopes(const Nonlinearity& F, double n, double lambda, VstarForm form = VstarForm::Derived);

}  // namespace pullin
