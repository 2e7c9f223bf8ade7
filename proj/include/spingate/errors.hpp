#pragma once

#include <stdexcept>
#include <string>

namespace spingate {

/// A flip/return orbit was requested where the anisotropy confines the spin
/// to one hemisphere (a >= drive field: the target cannot cross the equator).
class ConfinementError : public std::domain_error {
  public:
    explicit ConfinementError(const std::string& what) : std::domain_error(what) {}
};

/// The requested integer design has no solution (e.g. 2m <= 2n+1).
class InfeasibleError : public std::domain_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::domain_error(what) {}
};

/// A numeric procedure failed (root bracketing, quadrature convergence,
/// separatrix orbit with divergent period).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite state detected during time integration; carries the time stamp.
class IntegrationError : public NumericError {
  public:
    IntegrationError(const std::string& what, double t)
        : NumericError(what + " at t=" + std::to_string(t)), t_(t) {}
    double time() const { return t_; }

  private:
    double t_;
};

}  // namespace spingate
