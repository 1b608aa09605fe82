#pragma once

#include <array>
#include <utility>

#include "triwell/eigen.hpp"
#include "triwell/model.hpp"

namespace triwell {

/// A normalized bound state assembled from its four regions:
///   I   y <= -edge        C1 e^{beta y}
///   II  -edge <= y <= 0   C2 Ai(w(-y)) + C3 Bi(w(-y))
///   III 0 <= y <= edge    C4 Ai(w(y)) + C5 Bi(w(y))
///   IV  y >= edge         C6 e^{-beta y}
/// with w(y) = A^{1/3}(y - B/A). Region II is written in |y| so that the
/// Airy argument follows the even potential. Gauge: psi(0) > 0 for even
/// states, psi'(0) > 0 for odd ones.
struct PiecewiseState {
  DimensionlessWell well{1.0};
  int n = 0;
  double ebar = 0.0;
  Parity parity = Parity::even;
  std::array<double, 6> coeffs{};  // C1..C6
  double norm = 0.0;               // L2 norm before scaling

  double cbrt_a = 0.0;
  double w0 = 0.0;
  double beta = 0.0;
  double edge_value = 0.0;  // psi(edge), normalized

  double edge() const noexcept { return well.edge(); }
  double parity_sign() const noexcept { return parity == Parity::even ? 1.0 : -1.0; }
};

/// Mismatch tolerated between the interior edge slope and -beta psi(edge).
inline constexpr double kEdgeSlopeTolerance = 1e-6;
/// Interior quadrature tolerance, relative to the size of the integrand.
inline constexpr double kQuadratureTolerance = 1e-10;

/// Throws DomainError when state.ebar is not a root for this well (edge slope
/// mismatch above kEdgeSlopeTolerance) or lies outside the bound window.
PiecewiseState build_state(const DimensionlessWell& well, const EigenState& state);

double evaluate(const PiecewiseState& state, double y);
double evaluate_derivative(const PiecewiseState& state, double y);

/// [-edge - 5/beta, edge + 5/beta], the range used for sampling and node counts.
std::pair<double, double> sample_range(const PiecewiseState& state);

/// Strict sign changes on a uniform grid over sample_range, ignoring samples
/// with |psi| < 1e-12. Requires grid_points >= 1001.
int count_nodes(const PiecewiseState& state, int grid_points = 2001);

/// Integral of psi^2 over the real line: interior by adaptive Simpson, tails
/// in closed form.
double norm_integral(const PiecewiseState& state);

/// Integral of psi_a psi_b over the real line. Both states must share the well.
double overlap(const PiecewiseState& a, const PiecewiseState& b);

/// Relative mismatch of value and slope between the two one-sided branches at
/// y = -edge, 0, +edge, each scaled by the largest of the four magnitudes.
struct Continuity {
  std::array<double, 3> value{};
  std::array<double, 3> slope{};
  double worst() const;
};
Continuity continuity(const PiecewiseState& state);

/// Determinant of the 6x6 matching system for C1..C6 (value and slope
/// continuity at -edge, 0, +edge), each row scaled to unit max-norm. Vanishes
/// at every bound-state energy regardless of parity.
double matching_determinant(const DimensionlessWell& well, double ebar);

}  // namespace triwell
