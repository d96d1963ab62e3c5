#include "../oracles/oracles.hpp"

#include "pullin/bounds.hpp"
#include "pullin/branch.hpp"
#include "pullin/errors.hpp"
#include "pullin/spectral.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace pullin;

namespace {
const Nonlinearity kMems = Nonlinearity::mems(2.0);
const Nonlinearity kExp = Nonlinearity::exponential();

BranchOptions no_mu1() {
    BranchOptions o;
    o.compute_mu1 = false;
    return o;
}

const Branch& mems_disc() {
    static const Branch b = solve_branch({2.0, kMems, 0.0});
    return b;
}
}  // namespace

TEST_CASE("MEMS disc fold") {
    const auto& b = mems_disc();
    CHECK(b.fold_found);
    CHECK(b.lambda_star == doctest::Approx(0.789).epsilon(0.005 / 0.789));
    CHECK(b.m_star == doctest::Approx(0.445).epsilon(0.005 / 0.445));
    CHECK(b.points.size() == 400);
    CHECK(std::is_sorted(b.points.begin(), b.points.end(),
                         [](const BranchPoint& x, const BranchPoint& y) { return x.m < y.m; }));
}

TEST_CASE("exponential N = 1 fold against the closed form and a finite-difference oracle") {
    const auto b = solve_branch({1.0, kExp, 0.0}, no_mu1());
    const auto exact = oracle::bratu_1d_fold();
    CHECK(b.lambda_star == doctest::Approx(exact.lambda_star).epsilon(1e-9));
    CHECK(b.m_star == doctest::Approx(exact.m_star).epsilon(1e-4));
    // Second-order finite differences with h = 1/400 bisected on solvability.
    CHECK(b.lambda_star == doctest::Approx(oracle::bratu_fd_lambda_star()).epsilon(1e-4));
}

TEST_CASE("lambda(m) vanishes with m and has an interior maximum where the extremal is classical") {
    const auto sched_mems = MSchedule::logspaced(1e-4, 1.0 - 1e-4, 150);
    const auto sched_exp = MSchedule::logspaced(1e-4, 40.0, 150);
    for (int n = 1; n <= 9; ++n) {
        for (const auto& F : {kMems, kExp}) {
            if (F.is_singular() && n > 7) continue;
            const auto b = solve_branch({double(n), F, 0.0}, F.is_singular() ? sched_mems : sched_exp, no_mu1());
            CAPTURE(n);
            CAPTURE(F.name());
            CHECK(b.fold_found);
            CHECK(b.points.front().lambda < 1e-2);
            CHECK(b.points.front().lambda > 0.0);
            CHECK(b.m_star > b.points.front().m);
            CHECK(b.m_star < b.points.back().m);
        }
    }
}

TEST_CASE("no fold where the extremal is singular") {
    const auto b = solve_branch({9.0, kMems, 0.0}, no_mu1());
    CHECK_FALSE(b.fold_found);
    CHECK(b.lambda_star < 46.0 / 9.0);
    CHECK(b.lambda_star > 0.99 * 46.0 / 9.0);
}

TEST_CASE("branch is continuous: no jumps beyond a few percent of lambda*") {
    for (const ProblemSpec& s : {ProblemSpec{2.0, kMems, 0.0}, ProblemSpec{5.0, kExp, 0.0}}) {
        const auto b = solve_branch(s, no_mu1());
        double worst = 0.0;
        for (std::size_t i = 1; i < b.points.size(); ++i) {
            worst = std::max(worst, std::abs(b.points[i].lambda - b.points[i - 1].lambda));
        }
        CHECK(worst < 0.05 * b.lambda_star);
        // Refining the mesh near the fold does not reveal a larger maximum.
        const auto fine = solve_branch(s, MSchedule::logspaced(0.9 * b.m_star, 1.1 * b.m_star, 201), no_mu1());
        CHECK(fine.lambda_star == doctest::Approx(b.lambda_star).epsilon(1e-9));
    }
}

TEST_CASE("branch values agree with analytic bounds") {
    for (int n = 1; n <= 7; ++n) {
        const auto b = solve_branch({double(n), kMems, 0.0}, no_mu1());
        const auto stats = unit_ball_stats(n);
        CAPTURE(n);
        CHECK(b.lambda_star <= pullin_voltage_upper(kMems, stats).value);
        CHECK(b.m_star >= pullin_distance_lower(kMems, stats).value - 1e-3);
        CHECK(stability_necessary_check(kMems, stats, b.lambda_star, b.m_star));
    }
    for (int n = 1; n <= 2; ++n) {
        const auto b = solve_branch({double(n), kMems, 0.0}, no_mu1());
        CHECK(b.m_star <= mems_radial_upper(n).value + 1e-3);
    }
    for (int n = 1; n <= 9; ++n) {
        const auto b = solve_branch({double(n), kExp, 0.0}, no_mu1());
        const auto stats = unit_ball_stats(n);
        CHECK(b.lambda_star <= pullin_voltage_upper(kExp, stats).value);
        CHECK(b.m_star >= 1.0 - 1e-3);
    }
}

TEST_CASE("threading does not change results") {
    BranchOptions one = no_mu1(), many = no_mu1();
    one.threads = 1;
    many.threads = 4;
    const auto a = solve_branch({3.0, kMems, 1.0}, one);
    const auto c = solve_branch({3.0, kMems, 1.0}, many);
    REQUIRE(a.points.size() == c.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].lambda == c.points[i].lambda);
    CHECK(a.lambda_star == c.lambda_star);
}

TEST_CASE("schedule and dimension preconditions") {
    CHECK_THROWS_AS(MSchedule::logspaced(0.0, 0.5, 10), DomainError);
    CHECK_THROWS_AS(solve_branch({2.0, kMems, 0.0}, MSchedule{{0.1, 0.3, 0.2}}), DomainError);
    CHECK_THROWS_AS(solve_branch({2.0, kMems, 0.0}, MSchedule{{0.1, 0.5, 1.0}}), DomainError);
    CHECK_THROWS_AS(solve_branch({0.5, kMems, 0.0}), DomainError);
    CHECK_THROWS_AS(branch_lambda({1.0, kMems, -1.5}, 0.3), DomainError);  // N(alpha) = -2 < 1
}

TEST_CASE("minimal solutions") {
    const ProblemSpec spec{2.0, kMems, 0.0};
    const auto& b = mems_disc();
    SUBCASE("small voltage gives a small solution") {
        const auto u = minimal_solution(spec, 1e-6, b);
        CHECK(u.m() < 1e-6);
        CHECK(u.m() > 0.0);
    }
    SUBCASE("lambda = 0.5 lies on the stable branch") {
        const auto u = minimal_solution(spec, 0.5, b);
        CHECK(u.lambda() == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(u.m() < 0.445);
        CHECK(mu1(2.0, kMems, u.lambda(), u) > 0.0);
        CHECK(branch_mu1(spec, u.m()) > 0.0);
    }
    SUBCASE("minimal solutions increase with lambda") {
        const auto radii = linspace(0.0, 1.0, 41);
        RadialSolution prev = minimal_solution(spec, 0.05, b);
        for (double lam : {0.2, 0.4, 0.6, 0.75, 0.785}) {
            const auto u = minimal_solution(spec, lam, b);
            for (double r : radii) CHECK(u.value(r) >= prev.value(r) - 1e-12);
            prev = u;
        }
    }
    SUBCASE("beyond pull-in") {
        CHECK_THROWS_AS(minimal_solution(spec, b.lambda_star, b), DomainError);
        CHECK_THROWS_AS(minimal_solution(spec, 1.0, b), DomainError);
    }
}

TEST_CASE("derivative in lambda") {
    const ProblemSpec spec{2.0, kMems, 0.0};
    const auto& b = mems_disc();
    const auto radii = linspace(0.0, 1.0, 21);
    const auto v1 = dudlambda(spec, 0.3, 1e-4, b, radii);
    const auto v2 = dudlambda(spec, 0.6, 1e-4, b, radii);
    CHECK(std::abs(v1.values.back()) < 1e-8);
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
        CHECK(v1.values[i] > 0.0);
        CHECK(v2.values[i] >= v1.values[i]);
    }
    CHECK_THROWS_AS(dudlambda(spec, 0.789, 0.01, b, radii), DomainError);
}

TEST_CASE("power-law profiles map back to the original radius") {
    const ProblemSpec spec{3.0, kMems, 1.0};
    const auto u = radial_solution(spec, 0.4);
    CHECK(u.value(0.0) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(std::abs(u.value(1.0)) < 1e-12);
    CHECK(u.lambda() == doctest::Approx(branch_lambda(spec, 0.4)).epsilon(1e-12));
}
