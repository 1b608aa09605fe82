#pragma once

#include <string_view>
#include <vector>

#include "triwell/execution.hpp"
#include "triwell/model.hpp"

namespace triwell {

enum class Parity { even, odd };

std::string_view to_string(Parity p);

/// One bound state. Indices are ordered by energy; parity alternates
/// starting from an even ground state.
struct EigenState {
  int n = 0;
  double ebar = 0.0;
  Parity parity = Parity::even;
  double residual_abs = 0.0;  // |normalized parity residual| at the accepted root
};

struct Spectrum {
  DimensionlessWell well{1.0};
  std::vector<EigenState> states;
  int bracket_grid_size = 0;  // residual samples per parity
  double tolerance = 0.0;     // |dE| bound on each root
};

/// Matching residual of one parity class, parametrized by the decay rate
/// beta = sqrt(-E) on the closed range [0, sqrt(V0)].
///
/// The interior solution on 0 <= y <= edge is c Ai(w) + d Bi(w) with
/// (c, d) = (Bi'(w0), -Ai'(w0)) for even states (psi'(0) = 0) and
/// (Bi(w0), -Ai(w0)) for odd states (psi(0) = 0). Matching onto e^{-beta y}
/// at the edge gives
///   D = beta psi(w2) + A^{1/3} psi_w(w2) = c X_A + d X_B,
///   X_F = beta F(w2) + A^{1/3} F'(w2),
/// returned as D / (X_B hypot(c, d)). X_B is positive, so the sign and the
/// zeros are those of D; the value is bounded by 2 and its slope in beta
/// stays O(1) even in deep wells, where D itself switches sign across an
/// interval of width ~e^{-2 zeta2}. Values at w2 >= 0 use exponent-scaled
/// Airy functions. beta = 0 is the threshold limit.
double parity_residual(const DimensionlessWell& well, Parity parity, double beta);

/// Normalized even/odd residuals at an energy in the open window (-V0, 0).
/// Throw DomainError outside it.
double residual_even(const DimensionlessWell& well, double ebar);
double residual_odd(const DimensionlessWell& well, double ebar);

/// The coefficient ratios P = C2/C3 and Q = C4/C5 of the published matching
/// conditions, evaluated with the published arguments w1, w0, w2. Infinite
/// when the defining denominator vanishes.
struct RatioPQ {
  double p = 0.0;
  double q = 0.0;
};
RatioPQ ratios_pq(const DimensionlessWell& well, double ebar);

/// The published closed-form eigenvalue condition, transcribed term by term
/// (left-hand side minus right-hand side). Diagnostic only: its Airy
/// arguments do not follow from the even potential, and its roots differ
/// from the bound-state energies.
enum class Eq26Status { ok, pole };
struct Eq26Value {
  Eq26Status status = Eq26Status::ok;
  double value = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};
Eq26Value residual_eq26(const DimensionlessWell& well, double ebar);

/// Result of checking the published condition at one accepted root.
struct Eq26Check {
  int n = 0;
  Parity parity = Parity::even;
  double ebar = 0.0;
  Eq26Value eq26;
  bool consistent = false;  // status ok and |value| <= tolerance
};
inline constexpr double kEq26Tolerance = 1e-6;
std::vector<Eq26Check> eq26_diagnostic(const Spectrum& spectrum);

/// Roots of the published condition in (-V0, 0), located on a uniform energy
/// grid of `grid` cells. Sign changes across poles are discarded.
std::vector<double> eq26_roots(const DimensionlessWell& well, int grid = 4000,
                               double tol = 1e-12);

/// max(64, ceil(8 sqrt(V0))).
int bracket_grid_size(const DimensionlessWell& well);

/// All bound states, each refined to |dE| <= tol.
/// Requires 1e-14 <= tol <= 1e-6 (std::invalid_argument otherwise).
/// Throws ConvergenceError when a bracket does not converge and SolverError
/// when the merged spectrum breaks parity alternation.
Spectrum solve_spectrum(const DimensionlessWell& well, double tol = 1e-10,
                        Execution exec = Execution::parallel);

/// Depth at which the n-th excited state (n >= 1) appears at E = 0-.
/// Requires 1 <= n <= 8.
double critical_depth(int n, Convention convention, double tol = 1e-10);

}  // namespace triwell
