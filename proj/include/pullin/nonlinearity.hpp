#pragma once

#include <limits>
#include <string>

namespace pullin {

enum class Family { Exponential, MemsInversePower, PowerGrowth };

/// One of the three nonlinearities F with F(0) = 1:
///   Exponential          F(u) = e^u          on [0, inf)
///   MemsInversePower(p)  F(u) = (1 - u)^-p   on [0, 1),   p > 0
///   PowerGrowth(p)       F(u) = (1 + u)^p    on [0, inf), p > 1
class Nonlinearity {
public:
    static Nonlinearity exponential() { return Nonlinearity(Family::Exponential, 1.0); }
    static Nonlinearity mems(double p = 2.0);
    static Nonlinearity power(double p);

    Family family() const noexcept { return family_; }
    double exponent() const noexcept { return p_; }

    /// Right endpoint of the domain D_F = [0, a_F).
    double a_F() const noexcept {
        return family_ == Family::MemsInversePower ? 1.0 : std::numeric_limits<double>::infinity();
    }
    bool is_singular() const noexcept { return family_ == Family::MemsInversePower; }

    /// Unchecked evaluations for inner loops; return +inf outside the domain.
    double value_unchecked(double u) const noexcept;
    double deriv_unchecked(double u) const noexcept;
    double second_deriv_unchecked(double u) const noexcept;

    std::string name() const;

    friend bool operator==(const Nonlinearity&, const Nonlinearity&) = default;

private:
    Nonlinearity(Family f, double p) : family_(f), p_(p) {}

    Family family_;
    double p_;
};

double eval(const Nonlinearity& F, double u);
double eval_deriv(const Nonlinearity& F, double u);

/// The unique v >= 0 with F'(v) = z when z >= F'(0), and 0 otherwise.
double eval_fprime_inverse(const Nonlinearity& F, double z);

struct BfCf {
    double B_F;  ///< sup of tau / F(tau) over (0, a_F)
    double C_F;  ///< integral of 1 / F over [0, a_F)
};

BfCf bf_cf(const Nonlinearity& F);

/// Location of the supremum of tau / F(tau).
double bf_maximizer(const Nonlinearity& F);

/// Throws DomainError unless F is (1 - u)^-2; the radial bounds, singular
/// extremals and asymptotic envelopes are only available for that case.
void require_mems_p2(const Nonlinearity& F, const char* where);

}  // namespace pullin
