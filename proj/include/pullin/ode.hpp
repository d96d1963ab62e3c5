#pragma once

// Embedded Dormand-Prince 5(4) integrator with max-norm error control and
// terminal event location. Forward integration only.

#include "pullin/errors.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

namespace pullin::ode {

struct StepControl {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 0.0;  ///< 0 selects 1e-3 of the interval
    double h_max = std::numeric_limits<double>::infinity();
    std::size_t max_steps = 2'000'000;
};

template <std::size_t Dim>
struct Outcome {
    double r = 0.0;
    std::array<double, Dim> y{};
    std::array<double, Dim> dydr{};
    bool event_hit = false;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

/// Rhs signature: bool(double r, const State& y, State& dydr). Returning
/// false (or producing non-finite slopes) rejects the trial step, which lets
/// the caller keep stage values inside the domain of a singular nonlinearity.
template <std::size_t Dim, class Rhs>
class DormandPrince {
public:
    using State = std::array<double, Dim>;

    DormandPrince(Rhs rhs, StepControl control) : rhs_(std::move(rhs)), ctl_(control) {}

    const StepControl& control() const noexcept { return ctl_; }

    /// Integrates from r0 towards r_end. `observe(r, y, dydr)` runs at the start
    /// and after every accepted step. `event(r, y)` is a terminal event: the
    /// integration stops at the first r where it changes sign from positive to
    /// non-positive, located to machine precision within the final step.
    template <class Observer, class Event>
    Outcome<Dim> integrate(double r0, State y0, double r_end, Observer&& observe, Event&& event) {
        Outcome<Dim> out;
        double r = r0;
        State y = y0;
        State k1{};
        if (!eval(r, y, k1)) {
            throw ComputationError("initial state outside the domain of the right-hand side");
        }
        observe(r, y, k1);
        double g_prev = event(r, y);

        double h = ctl_.h_init > 0.0 ? ctl_.h_init : 1e-3 * (r_end - r0);
        h = std::min(h, ctl_.h_max);

        State y_new{}, k_new{}, err{};
        while (r < r_end) {
            if (out.accepted + out.rejected > ctl_.max_steps) {
                throw ComputationError("integrator exceeded the maximum number of steps");
            }
            bool last = false;
            if (r + h >= r_end) {
                h = r_end - r;
                last = true;
            }
            if (!(h > 16.0 * std::numeric_limits<double>::epsilon() * std::abs(r) && h > 1e-300)) {
                throw ComputationError("step size underflow at r = " + std::to_string(r));
            }
            double e = std::numeric_limits<double>::infinity();
            if (trial(r, y, k1, h, y_new, k_new, err)) {
                e = error_norm(y, y_new, err);
            }
            if (!(e <= 1.0)) {
                ++out.rejected;
                const double shrink = std::isfinite(e) ? std::max(0.2, 0.9 * std::pow(e, -0.2)) : 0.25;
                h *= shrink;
                continue;
            }
            ++out.accepted;
            const double r_new = last ? r_end : r + h;
            const double g_new = event(r_new, y_new);
            if (g_prev > 0.0 && g_new <= 0.0) {
                locate_event(r, y, k1, h, event, out);
                observe(out.r, out.y, out.dydr);
                out.event_hit = true;
                return out;
            }
            r = r_new;
            y = y_new;
            k1 = k_new;
            g_prev = g_new;
            observe(r, y, k1);

            const double grow = e > 0.0 ? std::min(5.0, 0.9 * std::pow(e, -0.2)) : 5.0;
            h = std::min(h * std::max(grow, 0.2), ctl_.h_max);
        }
        out.r = r;
        out.y = y;
        out.dydr = k1;
        return out;
    }

    template <class Observer>
    Outcome<Dim> integrate(double r0, State y0, double r_end, Observer&& observe) {
        return integrate(r0, y0, r_end, std::forward<Observer>(observe), [](double, const State&) { return 1.0; });
    }

private:
    bool eval(double r, const State& y, State& dydr) {
        if (!rhs_(r, y, dydr)) {
            return false;
        }
        for (double v : dydr) {
            if (!std::isfinite(v)) {
                return false;
            }
        }
        return true;
    }

    // One Dormand-Prince step of size h from (r, y) with first stage k1.
    bool trial(double r, const State& y, const State& k1, double h, State& y_new, State& k7, State& err) {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                                b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                                e6 = 22.0 / 525, e7 = -1.0 / 40;
        State k2, k3, k4, k5, k6, tmp;
        for (std::size_t i = 0; i < Dim; ++i) tmp[i] = y[i] + h * a21 * k1[i];
        if (!eval(r + c2 * h, tmp, k2)) return false;
        for (std::size_t i = 0; i < Dim; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        if (!eval(r + c3 * h, tmp, k3)) return false;
        for (std::size_t i = 0; i < Dim; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        if (!eval(r + c4 * h, tmp, k4)) return false;
        for (std::size_t i = 0; i < Dim; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        if (!eval(r + c5 * h, tmp, k5)) return false;
        for (std::size_t i = 0; i < Dim; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        if (!eval(r + h, tmp, k6)) return false;
        for (std::size_t i = 0; i < Dim; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        if (!eval(r + h, y_new, k7)) return false;
        for (std::size_t i = 0; i < Dim; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        return true;
    }

    double error_norm(const State& y, const State& y_new, const State& err) const {
        double worst = 0.0;
        for (std::size_t i = 0; i < Dim; ++i) {
            const double scale = ctl_.atol + ctl_.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            worst = std::max(worst, std::abs(err[i]) / scale);
        }
        return std::isfinite(worst) ? worst : std::numeric_limits<double>::infinity();
    }

    // Root of event(r + s, y(r + s)) for s in (0, h], each probe being a single
    // step of size s from the start of the final step.
    template <class Event>
    void locate_event(double r, const State& y, const State& k1, double h, Event& event, Outcome<Dim>& out) {
        State ys{}, ks{}, es{};
        auto g = [&](double s) {
            if (s <= 0.0) return event(r, y);
            if (!trial(r, y, k1, s, ys, ks, es)) {
                // Stage left the domain: the crossing lies before s.
                return -1.0;
            }
            return event(r + s, ys);
        };
        double lo = 0.0, hi = h;
        double g_hi = g(hi);
        if (g_hi > 0.0) {
            // Final-step rounding; accept the end point.
            lo = hi;
        } else {
            std::uintmax_t iters = 200;
            auto tol = boost::math::tools::eps_tolerance<double>(52);
            auto bracket = boost::math::tools::toms748_solve(g, lo, hi, g(lo), g_hi, tol, iters);
            lo = bracket.first;
            hi = bracket.second;
            // Prefer the side whose event value is closest to zero.
            const double glo = g(lo);
            const double ghi = g(hi);
            lo = std::abs(glo) <= std::abs(ghi) ? lo : hi;
        }
        if (!trial(r, y, k1, lo, ys, ks, es)) {
            throw ComputationError("event location left the domain of the right-hand side");
        }
        out.r = r + lo;
        out.y = ys;
        out.dydr = ks;
    }

    Rhs rhs_;
    StepControl ctl_;
};

template <std::size_t Dim, class Rhs>
DormandPrince<Dim, Rhs> make_dopri(Rhs rhs, StepControl control) {
    return DormandPrince<Dim, Rhs>(std::move(rhs), control);
}

}  // namespace pullin::ode
