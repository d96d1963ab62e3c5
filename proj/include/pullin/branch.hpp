#pragma once

#include "pullin/nonlinearity.hpp"
#include "pullin/powerlaw.hpp"
#include "pullin/radial.hpp"

#include <limits>
#include <span>
#include <vector>

namespace pullin {

/// -Delta u = lambda |x|^alpha F(u) on the unit ball of real dimension N.
struct ProblemSpec {
    double N = 2.0;
    Nonlinearity F = Nonlinearity::mems(2.0);
    double alpha = 0.0;
};

struct BranchPoint {
    double m = 0.0;
    double lambda = 0.0;
    /// Stability eigenvalue of the equivalent constant-profile problem in
    /// dimension N(alpha); NaN when not computed.
    double mu1 = std::numeric_limits<double>::quiet_NaN();
};

struct Branch {
    ProblemSpec spec;
    TransformResult transform;
    std::vector<BranchPoint> points;  ///< increasing m
    double lambda_star = 0.0;  ///< refined fold value, or sup over the points when no fold was found
    double m_star = 0.0;
    bool fold_found = false;
    double mu1_star = std::numeric_limits<double>::quiet_NaN();
};

/// Strictly increasing center values in (0, a_F).
struct MSchedule {
    std::vector<double> m;

    static MSchedule logspaced(double m_min, double m_max, std::size_t count);
    /// 400 log-spaced points on (1e-3, a_F - 1e-4) for singular F and on
    /// (1e-3, 40) for regular F.
    static MSchedule default_for(const Nonlinearity& F);
};

struct BranchOptions {
    double tol = 1e-10;
    bool compute_mu1 = true;
    bool refine_fold = true;
    unsigned threads = 0;  ///< 0 uses the hardware concurrency
};

/// The solution with center value m, on the unit ball in the original
/// variables (power-law profiles are mapped back by r -> r^(1 + alpha/2)).
RadialSolution radial_solution(const ProblemSpec& spec, double m, double tol = 1e-10);

/// lambda(m) alone.
double branch_lambda(const ProblemSpec& spec, double m, double tol = 1e-10);

/// Stability eigenvalue at center value m, computed for the equivalent
/// constant-profile problem in dimension N(alpha).
double branch_mu1(const ProblemSpec& spec, double m, double tol = 1e-10);

Branch solve_branch(const ProblemSpec& spec, const MSchedule& schedule, const BranchOptions& options = {});
Branch solve_branch(const ProblemSpec& spec, const BranchOptions& options = {});

/// Stable-branch solution at voltage lambda in (0, lambda*): the smallest m
/// with lambda(m) = lambda, located on the sampled branch and refined by a
/// root solve in m. Throws DomainError("beyond pull-in") for lambda >= lambda*.
RadialSolution minimal_solution(const ProblemSpec& spec, double lambda, const Branch& branch, double tol = 1e-10);

/// Central difference (u_{lambda+h} - u_{lambda-h}) / 2h of minimal solutions
/// on the given radii.
RadialProfile dudlambda(const ProblemSpec& spec, double lambda, double h, const Branch& branch,
                        std::span<const double> radii, double tol = 1e-10);

}  // namespace pullin
