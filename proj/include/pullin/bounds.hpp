#pragma once

#include "pullin/nonlinearity.hpp"

#include <functional>
#include <optional>
#include <string>

namespace pullin {

/// Data of a domain Omega and a permittivity profile f needed by the bounds.
struct DomainStats {
    double lambda1 = 0.0;         ///< lambda_1(Omega)
    double volume = 0.0;          ///< |Omega|
    double N = 0.0;
    double inf_f = 1.0;
    double sup_f = 1.0;
    double f_phi_integral = 1.0;  ///< int f phi with int phi = 1
};

struct BoundReport {
    std::string name;
    double value = 0.0;
    std::optional<double> optimizer;  ///< minimizing t or tau, when the bound is an infimum
    bool valid = true;
    std::string reason;  ///< why the hypotheses fail, when valid == false
    std::string source;  ///< which estimate produced the value
};

/// Several printed constants disagree with the derivation they come from.
/// Derived is the default; AsPrinted reproduces the printed formula.
enum class FormulaVariant { Derived, AsPrinted };

/// omega_N = pi^(N/2) / Gamma(N/2 + 1), for real N > 0.
double volume_unit_ball(double n);

/// Unit ball with f = |x|^alpha: lambda_1 from the spectral solver,
/// f_phi_integral from profile_weight_ratio.
DomainStats unit_ball_stats(double n, double alpha = 0.0);

void validate(const DomainStats& stats);

struct Minimum {
    double x = 0.0;
    double value = 0.0;
};

/// inf of f over the open interval (a, b): scan `grid` points with the ends
/// inset by 1e-9, then Brent refinement around the best grid point.
/// Non-finite values are treated as +inf. Throws ComputationError if f is
/// nowhere finite.
Minimum minimize_on_open_interval(const std::function<double(double)>& f, double a, double b,
                                  std::size_t grid = 2000);

// --- general nonlinearities -------------------------------------------------

/// lambda* <= lambda_1 min{B_F / inf f, C_F / int f phi}; the first term is
/// dropped when inf f = 0.
BoundReport pullin_voltage_upper(const Nonlinearity& F, const DomainStats& stats);

/// ||u*|| >= (F')^-1(max{(1/B_F) inf f / sup f, (1/C_F) int f phi / sup f}).
BoundReport pullin_distance_lower(const Nonlinearity& F, const DomainStats& stats);

/// The family-specific closed forms of the same lower bound (no clamping).
BoundReport pullin_distance_lower_closed_form(const Nonlinearity& F, const DomainStats& stats);

/// Whether lambda_1 <= lambda* sup f F'(||u*||) holds (necessary for a
/// classical extremal).
bool stability_necessary_check(const Nonlinearity& F, const DomainStats& stats, double lambda_star,
                               double u_star_norm);

// --- exponential -----------------------------------------------------------

double beta_N_objective(double t, double n);
BoundReport beta_N(double n);

/// Integral of (-ln r)^p r over (0, R), p > -1, 0 < R <= 1; +inf past double range.
double lambda_p_R(double p, double R);

/// Part 1 (3 <= N <= 9): lambda_1 beta_N / (e (N-2)) (|Omega|/omega_N)^s with
/// s = 2/N (Derived) or N/2 (AsPrinted). Part 2 (N = 2): the infimum over
/// t in (0, 2) using Lambda; valid only if the caller asserts Omega in B_(1/2).
BoundReport exp_upper_bound(double n, const DomainStats& stats, bool inside_half_ball = false,
                            FormulaVariant variant = FormulaVariant::Derived);

/// lambda_1(Omega) >= e (N-2) / beta_N (omega_N / |Omega|)^s, same s.
BoundReport lambda1_lower_bound(double n, double volume, FormulaVariant variant = FormulaVariant::Derived);

// --- MEMS ------------------------------------------------------------------

/// Derived: (8/27) N^(-3/(2t+3)) (2t/(4t+6-3N))^(2t/(2t+3)) E^(3/t);
/// AsPrinted: (16/27) N^(-3/(2t+3)) (2t/(4t+6-3N))^(2t/(2t+3)) E^(2/t);
/// E = 4(2t+1)/(4t+2-t^2), 3(N-2)/4 < t < 2 + sqrt 6.
double gamma_N_objective(double t, double n, FormulaVariant variant = FormulaVariant::Derived);
BoundReport gamma_N(double n, FormulaVariant variant = FormulaVariant::Derived);

/// 1 - exp(-lambda_1 gamma_N / (2(N-2)) (|Omega|/omega_N)^(2/N)), 3 <= N <= 7.
BoundReport mems_upper_general(double n, const DomainStats& stats,
                               FormulaVariant variant = FormulaVariant::Derived);

// --- power growth ----------------------------------------------------------

struct PowerWindow {
    double t_minus, t_plus, t_np;
    double lo() const { return t_minus > t_np ? t_minus : t_np; }
};
PowerWindow beta_Np_window(double n, double p);
double beta_Np_objective(double t, double n, double p);
BoundReport beta_Np(double n, double p);

/// (p-1)^(p-1) lambda_1 beta_{N,p} / (p^p (N-2)) (|Omega|/omega_N)^(2/N), N in {3, 4}.
BoundReport power_upper_general(double n, double p, const DomainStats& stats);

// --- shared constants ------------------------------------------------------

/// Energy estimate for semi-stable solutions:
///   exp:  ||e^u||_{2t+1}          <= (4/(2-t))^(1/t) |Omega|^(1/(2t+1)),  0 < t < 2
///   MEMS: ||(1-u)^-2||_{t+3/2}    <= E^(2/t) |Omega|^(2/(2t+3)),           0 < t < 2 + sqrt 6
double energy_bound(const Nonlinearity& F, double t, double volume);

/// gamma(tau, N): tau/(2 tau - 1) for N = 1, tau/(4(tau - 1)) for N = 2 and
/// (tau-1)^((tau-1)/tau) / ((N-2) N^(1/tau) (2 tau - N)^((tau-1)/tau)) for N >= 3;
/// tau > max{1, N/2}.
double gamma_tau_N(double tau, double n);

/// C(t, N) = 4 lambda_1 gamma(t + 3/2, N) / 27 E^(2/t).
double C_t_N(double t, double n, double lambda1);

/// Left side of the radial MEMS inequality at sup-norm m:
///   int_0^1 R^(N-1) / (1 - m + C(t,N) R^k)^(2t+3) dR,  k = (4t+6-2N)/(2t+3).
double mems_radial_integral(double m, double t, double n, double lambda1);
/// Right side: E^((2t+3)/t) / N.
double mems_radial_rhs(double t, double n);
/// Largest m in [0, 1) compatible with the inequality at this t (1 if none).
double mems_radial_root(double t, double n, double lambda1);

/// Upper bound on the pull-in distance of the unit ball (1 <= N <= 11):
/// infimum over t of mems_radial_root.
BoundReport mems_radial_upper(double n);

/// Explicit relaxations for N = 1, 2 (exponent of R replaced by 1).
BoundReport mems_radial_closed_form(double n);

}  // namespace pullin
