#include "../oracles/oracles.hpp"

#include "pullin/bounds.hpp"
#include "pullin/errors.hpp"
#include "pullin/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace pullin;

namespace {
constexpr double pi = std::numbers::pi;
const Nonlinearity kMems = Nonlinearity::mems(2.0);
const Nonlinearity kExp = Nonlinearity::exponential();

DomainStats ball_of_radius(double n, double rho) {
    // lambda_1 scales as rho^-2, the volume as rho^N.
    auto s = unit_ball_stats(n);
    s.lambda1 /= rho * rho;
    s.volume *= std::pow(rho, n);
    return s;
}
}  // namespace

TEST_CASE("unit ball data") {
    CHECK(volume_unit_ball(1.0) == doctest::Approx(2.0));
    CHECK(volume_unit_ball(2.0) == doctest::Approx(pi));
    CHECK(volume_unit_ball(3.0) == doctest::Approx(4.0 * pi / 3.0));
    const auto s = unit_ball_stats(2.0);
    CHECK(s.lambda1 == doctest::Approx(std::pow(oracle::bessel_j0_first_zero(), 2)).epsilon(1e-9));
    CHECK(s.f_phi_integral == doctest::Approx(1.0));
    const auto w = unit_ball_stats(2.0, 2.0);
    CHECK(w.inf_f == 0.0);
    CHECK(w.sup_f == 1.0);
    CHECK(w.f_phi_integral == doctest::Approx(profile_weight_ratio(2.0, 2.0)));
    DomainStats bad = s;
    bad.inf_f = 2.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("open-interval minimizer") {
    auto m = minimize_on_open_interval([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, 0.0, 1.0);
    CHECK(m.x == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-14));
    // Non-finite values count as +inf.
    auto g = minimize_on_open_interval([](double x) { return x < 0.5 ? NAN : x; }, 0.0, 1.0);
    CHECK(g.value == doctest::Approx(0.5).epsilon(1e-6));
    CHECK_THROWS_AS(minimize_on_open_interval([](double) { return NAN; }, 0.0, 1.0), ComputationError);
}

TEST_CASE("pull-in voltage upper bound") {
    const auto s = unit_ball_stats(2.0);
    CHECK(pullin_voltage_upper(kMems, s).value == doctest::Approx(4.0 / 27.0 * s.lambda1).epsilon(1e-12));
    CHECK(pullin_voltage_upper(kMems, s).value == doctest::Approx(0.8568).epsilon(1e-4));
    CHECK(pullin_voltage_upper(kExp, s).value == doctest::Approx(s.lambda1 / std::numbers::e).epsilon(1e-12));
    // inf f = 0 drops the B_F term; only C_F / int f phi remains.
    const auto w = unit_ball_stats(2.0, 2.0);
    CHECK(pullin_voltage_upper(kMems, w).value == doctest::Approx(w.lambda1 / 3.0 / w.f_phi_integral));
}

TEST_CASE("pull-in distance lower bound") {
    CHECK(pullin_distance_lower(kMems, unit_ball_stats(2.0)).value == doctest::Approx(1.0 / 3.0));
    CHECK(pullin_distance_lower(Nonlinearity::mems(3.0), unit_ball_stats(2.0)).value == doctest::Approx(0.25));
    CHECK(pullin_distance_lower(kExp, unit_ball_stats(3.0)).value == doctest::Approx(1.0));
    for (int n = 1; n <= 5; ++n) {
        const auto s = unit_ball_stats(n);
        for (const auto& F : {kMems, kExp, Nonlinearity::power(2.0)}) {
            CHECK(pullin_distance_lower_closed_form(F, s).value ==
                  doctest::Approx(pullin_distance_lower(F, s).value).epsilon(1e-12));
        }
    }
    // inf f / sup f -> 0 with a small weighted mean: the bound clamps to 0.
    DomainStats s = unit_ball_stats(2.0);
    s.inf_f = 1e-12;
    s.sup_f = 1.0;
    s.f_phi_integral = 1e-12;
    CHECK(pullin_distance_lower(kMems, s).value == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("stability necessary condition") {
    const auto s = unit_ball_stats(2.0);
    CHECK(stability_necessary_check(kMems, s, 0.789, 0.445));
    CHECK(0.789 * 2.0 / std::pow(1.0 - 0.445, 3) == doctest::Approx(9.24).epsilon(1e-3));
    CHECK_FALSE(stability_necessary_check(kMems, s, 0.0, 0.445));
}

TEST_CASE("beta_N") {
    CHECK(beta_N(3.0).value == doctest::Approx(1.9915).epsilon(1e-3 / 1.9915));
    CHECK(beta_N(6.0).value == doctest::Approx(3.42269).epsilon(1e-3 / 3.42269));
    CHECK(beta_N(9.0).value == doctest::Approx(19.0031).epsilon(1e-3 / 19.0031));
    CHECK(beta_N(3.0).valid);
    CHECK_FALSE(beta_N(10.0).valid);
    CHECK_FALSE(beta_N(2.0).valid);
    for (int n = 3; n <= 9; ++n) {
        const auto b = beta_N(n);
        const auto scan = oracle::grid_scan_min([n](double t) { return beta_N_objective(t, n); }, (n - 2.0) / 4.0, 2.0);
        CHECK(b.value == doctest::Approx(scan.value).epsilon(1e-4));
        CHECK(b.value <= scan.value * (1.0 + 1e-12));
        CHECK(*b.optimizer == doctest::Approx(scan.x).epsilon(1e-3));
    }
}

TEST_CASE("Lambda(p, R)") {
    CHECK(lambda_p_R(1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lambda_p_R(0.0, 0.5) == doctest::Approx(0.125).epsilon(1e-12));
    for (int p = 0; p <= 6; ++p) {
        for (double R : {0.05, 0.3, 0.5, 0.9, 1.0}) {
            CHECK(lambda_p_R(p, R) == doctest::Approx(oracle::lambda_p_R_recursion(p, R)).epsilon(1e-10));
        }
    }
    for (double p : {-0.5, 0.7, 1.25, 2.5}) {
        for (double R : {0.1, 0.5, 1.0}) {
            CHECK(lambda_p_R(p, R) == doctest::Approx(oracle::lambda_p_R_gamma(p, R)).epsilon(1e-10));
        }
    }
    CHECK(std::isinf(lambda_p_R(1e4, 0.5)));
    CHECK_THROWS_AS(lambda_p_R(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(lambda_p_R(1.0, 1.5), DomainError);
}

TEST_CASE("exponential upper bound and the eigenvalue lower bound") {
    const auto s = unit_ball_stats(3.0);
    CHECK(exp_upper_bound(3.0, s).value ==
          doctest::Approx(s.lambda1 * beta_N(3.0).value / std::numbers::e).epsilon(1e-12));
    // Both variants agree on the unit ball; only the derived one is scale-invariant.
    CHECK(exp_upper_bound(3.0, s, false, FormulaVariant::AsPrinted).value ==
          doctest::Approx(exp_upper_bound(3.0, s).value));
    for (double rho : {0.5, 2.0}) {
        const auto b = ball_of_radius(3.0, rho);
        CHECK(exp_upper_bound(3.0, b).value == doctest::Approx(exp_upper_bound(3.0, s).value).epsilon(1e-9));
        CHECK(exp_upper_bound(3.0, b, false, FormulaVariant::AsPrinted).value !=
              doctest::Approx(exp_upper_bound(3.0, s).value).epsilon(1e-3));
    }
    // lambda_1 lower bound holds on balls of any radius.
    for (int n = 3; n <= 9; ++n) {
        for (double rho : {0.3, 1.0, 4.0}) {
            const auto b = ball_of_radius(n, rho);
            CHECK(lambda1_lower_bound(n, b.volume).value <= b.lambda1);
        }
    }
    // N = 2 logarithmic form needs Omega inside B_(1/2).
    const auto half = ball_of_radius(2.0, 0.5);
    const auto two = exp_upper_bound(2.0, half, true);
    CHECK(two.valid);
    CHECK(two.value >= 1.0);  // an upper bound on ||u*|| >= 1
    CHECK_FALSE(exp_upper_bound(2.0, half, false).valid);
    CHECK_FALSE(exp_upper_bound(2.0, unit_ball_stats(2.0), true).valid);
}

TEST_CASE("gamma_N and the general MEMS bound") {
    for (int n = 3; n <= 7; ++n) {
        for (auto v : {FormulaVariant::Derived, FormulaVariant::AsPrinted}) {
            const auto g = gamma_N(n, v);
            CHECK(std::isfinite(g.value));
            CHECK(g.value > 0.0);
            const auto scan = oracle::grid_scan_min([n, v](double t) { return gamma_N_objective(t, n, v); },
                                                    0.75 * (n - 2.0), 2.0 + std::sqrt(6.0));
            CHECK(g.value == doctest::Approx(scan.value).epsilon(1e-4));
        }
    }
    DomainStats cube;
    cube.N = 3.0;
    cube.lambda1 = 3.0 * pi * pi;
    cube.volume = 1.0;
    const double cube_bound = mems_upper_general(3.0, cube).value;
    CHECK(cube_bound == doctest::Approx(0.993).epsilon(0.002 / 0.993));
    CHECK(mems_upper_general(3.0, unit_ball_stats(3.0)).value < cube_bound);
    CHECK(mems_upper_general(3.0, unit_ball_stats(3.0)).value > 0.50351);  // above the computed pull-in distance
    CHECK_FALSE(mems_upper_general(8.0, unit_ball_stats(8.0)).valid);
}

TEST_CASE("power-growth constants") {
    const auto w = beta_Np_window(3.0, 2.0);
    CHECK(w.t_minus == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(w.t_plus == doctest::Approx(2.0 + std::sqrt(2.0)));
    const auto b = beta_Np(3.0, 2.0);
    CHECK(b.valid);
    CHECK(std::isfinite(b.value));
    CHECK(b.value > 0.0);
    const auto scan = oracle::grid_scan_min([](double t) { return beta_Np_objective(t, 3.0, 2.0); }, w.lo(), w.t_plus);
    CHECK(b.value == doctest::Approx(scan.value).epsilon(1e-4));
    CHECK_FALSE(beta_Np(5.0, 2.0).valid);
    const auto up = power_upper_general(3.0, 2.0, unit_ball_stats(3.0));
    CHECK(up.valid);
    CHECK(up.value > 0.0);
}

TEST_CASE("energy bound") {
    CHECK(energy_bound(kMems, 1.0, 1.0) == doctest::Approx(5.76));
    CHECK(energy_bound(kExp, 1.0, 1.0) == doctest::Approx(4.0));
    CHECK(energy_bound(kExp, 2.0 - 1e-9, 1.0) > 6e4);  // (4 / 1e-9)^(1/2)
    CHECK_THROWS_AS(energy_bound(kExp, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(energy_bound(Nonlinearity::mems(3.0), 1.0, 1.0), DomainError);
}

TEST_CASE("gamma(tau, N)") {
    CHECK(gamma_tau_N(2.0, 1.0) == doctest::Approx(2.0 / 3.0));
    CHECK(gamma_tau_N(2.0, 2.0) == doctest::Approx(0.5));
    CHECK(gamma_tau_N(1.5 + 1e-12, 3.0) > 1e3);
    CHECK_THROWS_AS(gamma_tau_N(1.5, 3.0), DomainError);
    CHECK_THROWS_AS(gamma_tau_N(2.0, 1.5), DomainError);
    // Continuous on its domain, decreasing for large tau.
    for (double n : {3.0, 5.0, 8.0}) {
        double prev = gamma_tau_N(n / 2.0 + 0.5, n);
        for (double tau = n / 2.0 + 0.5; tau < 60.0; tau += 0.01) {
            const double g = gamma_tau_N(tau, n);
            CHECK(std::abs(g - prev) < 0.05 * std::max(1.0, prev));
            if (tau > 2.0 * n) CHECK(g <= prev);
            prev = g;
        }
    }
}

TEST_CASE("radial MEMS integral against the incomplete beta function") {
    for (int n = 1; n <= 3; ++n) {
        const double lam1 = lambda1_ball(n).eigenvalue;
        for (double t : {0.4, 1.0, 2.5, 4.0}) {
            if (4.0 * t + 6.0 - 2.0 * n <= 0.0 || t <= 0.75 * (n - 2.0)) continue;
            const double C = C_t_N(t, n, lam1);
            const double q = 2.0 * t + 3.0, k = (4.0 * t + 6.0 - 2.0 * n) / q;
            for (double m : {0.0, 0.3, 0.7, 0.99, 1.0 - 1e-8}) {
                CAPTURE(n);
                CAPTURE(t);
                CAPTURE(m);
                CHECK(mems_radial_integral(m, t, n, lam1) ==
                      doctest::Approx(oracle::radial_integral_beta(1.0 - m, C, n, k, q)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("radial MEMS bounds") {
    const auto one = mems_radial_upper(1.0);
    const auto two = mems_radial_upper(2.0);
    CHECK(one.valid);
    CHECK(two.valid);
    CHECK(one.value > 0.0);
    CHECK(one.value < 1.0);
    CHECK(two.value < 1.0);
    // At t = optimizer the sup-norm root equals the bound.
    CHECK(mems_radial_root(*one.optimizer, 1.0, lambda1_ball(1.0).eigenvalue) == doctest::Approx(one.value));
    const auto nine = mems_radial_upper(9.0);
    CHECK_FALSE(nine.valid);
    CHECK(nine.value == 1.0);
    CHECK_THROWS_AS(mems_radial_upper(12.0), DomainError);
    for (double n : {1.0, 2.0}) {
        const auto c = mems_radial_closed_form(n);
        CHECK(c.value > 0.0);
        CHECK(c.value < 1.0);
    }
    CHECK_THROWS_AS(mems_radial_closed_form(3.0), DomainError);
}
