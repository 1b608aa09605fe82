#pragma once

#include <stdexcept>
#include <string>

namespace triwell {

/// An argument lies outside the mathematical domain of an operation
/// (energy outside the bound window, non-positive depth, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An Airy evaluation left the representable range of the unscaled functions.
/// Callers that need large positive arguments should use airy_eval_scaled.
class AiryRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Root refinement did not converge; carries the bracket that was being refined.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// The spectrum violated a structural invariant (ordering, parity alternation).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The finite-difference oracle failed to stabilize its domain.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triwell
