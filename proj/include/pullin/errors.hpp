#pragma once

#include <stdexcept>
#include <string>

namespace pullin {

/// A precondition on an input was violated (bad dimension, u outside the
/// domain of F, parameter window empty, ...). The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
public:
    DomainError(std::string precondition, const std::string& message)
        : std::domain_error(message), precondition_(std::move(precondition)) {}

    const std::string& precondition() const noexcept { return precondition_; }

private:
    std::string precondition_;
};

/// A numerical procedure failed on valid input (no crossing found, bracket
/// could not be established, step size underflow). Maps to exit code 1.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const char* precondition, const std::string& message) {
    if (!ok) {
        throw DomainError(precondition, message);
    }
}

}  // namespace pullin
