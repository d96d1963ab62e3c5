#pragma once

#include "pullin/nonlinearity.hpp"
#include "pullin/radial.hpp"

#include <functional>
#include <vector>

namespace pullin {

/// Principal Dirichlet eigenpair of -psi'' - (N-1)/r psi' + q psi = mu psi on
/// (0, 1), psi(0) = 1, psi'(0) = 0, psi(1) = 0.
struct EigenPair {
    double eigenvalue = 0.0;
    std::vector<double> r, psi, dpsi;
    double mass = 0.0;           ///< int_0^1 r^(N-1) psi dr
    double normalization = 0.0;  ///< c with int_B c psi(|x|) dx = 1 (uses the sphere area N omega_N)
};

/// Radial potential q(r) on [0, 1].
using RadialPotential = std::function<double(double)>;

/// Prufer angle theta(1) for spectral parameter mu, with psi = rho sin(theta),
/// psi' = rho cos(theta). theta(1; mu) is increasing in mu and psi has
/// floor(theta(1) / pi) interior zeros.
double prufer_angle(double n, const RadialPotential& q, double mu, double tol = 1e-10);

/// Number of zeros of psi(.; mu) in (0, 1).
int zero_count(double n, const RadialPotential& q, double mu, double tol = 1e-10);

/// Principal eigenvalue: the mu with theta(1; mu) = pi, bracketed from
/// [lo, hi] by geometric widening and solved to relative tolerance tol.
double principal_eigenvalue(double n, const RadialPotential& q, double lo, double hi, double tol = 1e-10);

/// lambda_1 of the unit ball in real dimension N >= 1 with its eigenfunction.
EigenPair lambda1_ball(double n, double tol = 1e-10);

/// int_0^1 r^(N-1+alpha) psi / int_0^1 r^(N-1) psi for the ball's principal
/// eigenfunction, i.e. int_B |x|^alpha phi_B with int_B phi_B = 1.
/// Requires N >= 1, alpha > -2 and N + alpha > 0.
double profile_weight_ratio(double n, double alpha, double tol = 1e-10);

/// Stability eigenvalue: principal eigenvalue of -Delta - lambda F'(u) on the
/// unit ball in dimension N, for a radial solution u at voltage lambda.
double mu1(double n, const Nonlinearity& F, double lambda, const RadialSolution& u, double tol = 1e-10);

/// The same eigenvalue for the solution with center value m, integrating the
/// Prufer angle together with the shooting ODE so that the potential F'(v) is
/// exact rather than interpolated. Used along branches.
double mu1_at_center(const Nonlinearity& F, double n, double m, double tol = 1e-10);

}  // namespace pullin
