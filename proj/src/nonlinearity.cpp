#include "pullin/nonlinearity.hpp"

#include "pullin/errors.hpp"

#include <cmath>
#include <sstream>

namespace pullin {

Nonlinearity Nonlinearity::mems(double p) {
    require(std::isfinite(p) && p > 0.0, "p > 0", "MEMS exponent p must be positive");
    return Nonlinearity(Family::MemsInversePower, p);
}

Nonlinearity Nonlinearity::power(double p) {
    require(std::isfinite(p) && p > 1.0, "p > 1", "power-growth exponent p must exceed 1");
    return Nonlinearity(Family::PowerGrowth, p);
}

double Nonlinearity::value_unchecked(double u) const noexcept {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (family_) {
    case Family::Exponential:
        return std::exp(u);
    case Family::MemsInversePower:
        return u < 1.0 ? std::pow(1.0 - u, -p_) : inf;
    case Family::PowerGrowth:
        return u > -1.0 ? std::pow(1.0 + u, p_) : inf;
    }
    return inf;
}

double Nonlinearity::deriv_unchecked(double u) const noexcept {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (family_) {
    case Family::Exponential:
        return std::exp(u);
    case Family::MemsInversePower:
        return u < 1.0 ? p_ * std::pow(1.0 - u, -p_ - 1.0) : inf;
    case Family::PowerGrowth:
        return u > -1.0 ? p_ * std::pow(1.0 + u, p_ - 1.0) : inf;
    }
    return inf;
}

double Nonlinearity::second_deriv_unchecked(double u) const noexcept {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (family_) {
    case Family::Exponential:
        return std::exp(u);
    case Family::MemsInversePower:
        return u < 1.0 ? p_ * (p_ + 1.0) * std::pow(1.0 - u, -p_ - 2.0) : inf;
    case Family::PowerGrowth:
        return u > -1.0 ? p_ * (p_ - 1.0) * std::pow(1.0 + u, p_ - 2.0) : inf;
    }
    return inf;
}

std::string Nonlinearity::name() const {
    std::ostringstream os;
    switch (family_) {
    case Family::Exponential:
        return "exp";
    case Family::MemsInversePower:
        os << "mems(p=" << p_ << ")";
        break;
    case Family::PowerGrowth:
        os << "power(p=" << p_ << ")";
        break;
    }
    return os.str();
}

namespace {

void check_argument(const Nonlinearity& F, double u) {
    if (std::isnan(u)) {
        throw DomainError("u finite", "nonlinearity evaluated at NaN");
    }
    if (!(u < F.a_F())) {
        std::ostringstream os;
        os << F.name() << " evaluated at u = " << u << " outside its domain [0, " << F.a_F() << ")";
        throw DomainError("u < a_F", os.str());
    }
    if (F.family() == Family::PowerGrowth && u <= -1.0) {
        throw DomainError("u > -1", "power-growth nonlinearity requires u > -1");
    }
}

}  // namespace

double eval(const Nonlinearity& F, double u) {
    check_argument(F, u);
    return F.value_unchecked(u);
}

double eval_deriv(const Nonlinearity& F, double u) {
    check_argument(F, u);
    return F.deriv_unchecked(u);
}

double eval_fprime_inverse(const Nonlinearity& F, double z) {
    require(!std::isnan(z) && z >= 0.0, "z >= 0", "(F')^-1 requires a nonnegative argument");
    const double p = F.exponent();
    if (z < F.deriv_unchecked(0.0)) {
        return 0.0;
    }
    switch (F.family()) {
    case Family::Exponential:
        return std::log(z);
    case Family::MemsInversePower:
        return 1.0 - std::pow(p / z, 1.0 / (p + 1.0));
    case Family::PowerGrowth:
        return std::pow(z / p, 1.0 / (p - 1.0)) - 1.0;
    }
    return 0.0;
}

BfCf bf_cf(const Nonlinearity& F) {
    const double p = F.exponent();
    switch (F.family()) {
    case Family::Exponential:
        return {std::exp(-1.0), 1.0};
    case Family::MemsInversePower:
        return {std::pow(p, p) / std::pow(p + 1.0, p + 1.0), 1.0 / (p + 1.0)};
    case Family::PowerGrowth:
        return {std::pow(p - 1.0, p - 1.0) / std::pow(p, p), 1.0 / (p - 1.0)};
    }
    return {0.0, 0.0};
}

double bf_maximizer(const Nonlinearity& F) {
    const double p = F.exponent();
    switch (F.family()) {
    case Family::Exponential:
        return 1.0;
    case Family::MemsInversePower:
        return 1.0 / (p + 1.0);
    case Family::PowerGrowth:
        return 1.0 / (p - 1.0);
    }
    return 0.0;
}

void require_mems_p2(const Nonlinearity& F, const char* where) {
    if (F.family() != Family::MemsInversePower || F.exponent() != 2.0) {
        throw DomainError("F = (1-u)^-2", std::string(where) + " is only defined for the MEMS nonlinearity with p = 2");
    }
}

}  // namespace pullin
