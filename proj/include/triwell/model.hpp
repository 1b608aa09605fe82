#pragma once

#include <string_view>

namespace triwell {

/// Geometry of the dimensionless triangle.
///   eq1         V(y) = -V0 (1 - |y|)     on |y| <= 1
///   halfwidth2  V(y) = -V0 (1 - |y|/2)   on |y| <= 2
/// halfwidth2 reads "range 2a" as a half-width of 2a; it exists to test which
/// geometry the published energies correspond to.
enum class Convention { eq1, halfwidth2 };

std::string_view to_string(Convention c);
/// Accepts "eq1" and "halfwidth2"; throws std::invalid_argument otherwise.
Convention parse_convention(std::string_view text);

/// A well in physical units. All fields must be positive and finite.
struct PhysicalWell {
  double mass = 1.0;
  double hbar = 1.0;
  double depth = 1.0;       // V0
  double half_width = 1.0;  // a
};

/// A well in units of hbar^2 / (2 m a^2), lengths in units of a.
class DimensionlessWell {
 public:
  /// Throws DomainError unless vbar0 is positive and finite.
  explicit DimensionlessWell(double vbar0, Convention convention = Convention::eq1);

  double vbar0() const noexcept { return vbar0_; }
  Convention convention() const noexcept { return convention_; }
  /// Position of the potential edge (1 for eq1, 2 for halfwidth2).
  double edge() const noexcept { return convention_ == Convention::eq1 ? 1.0 : 2.0; }
  /// Slope of the linear potential, A = V0 / edge.
  double slope() const noexcept { return vbar0_ / edge(); }

 private:
  double vbar0_;
  Convention convention_;
};

/// The energy unit hbar^2 / (2 m a^2) of a physical well.
double energy_unit(const PhysicalWell& well);
DimensionlessWell to_dimensionless(const PhysicalWell& well);
double to_physical_energy(const PhysicalWell& well, double ebar);
double to_dimensionless_energy(const PhysicalWell& well, double energy);

/// V(y) for y = x / a. Even in y, minimum -V0 at the origin, zero outside the edge.
double potential_value(const DimensionlessWell& well, double y);

/// Airy arguments and exterior decay rate for one trial energy.
///   w0, w1, w2  arguments w = A^{1/3}(y - B/A) at y = 0, -edge, +edge,
///               with A the slope and B = E + V0
///   beta        sqrt(-E), the exterior decay rate in units of 1/a
struct MatchPoints {
  double cbrt_a = 0.0;
  double w0 = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double beta = 0.0;
};

/// Throws DomainError unless -V0 < ebar < 0.
MatchPoints match_points(const DimensionlessWell& well, double ebar);

/// Same quantities parametrized by the decay rate, on the closed range
/// 0 <= beta <= sqrt(V0). beta = 0 is the threshold limit E -> 0-.
MatchPoints match_points_at_decay(const DimensionlessWell& well, double beta);

}  // namespace triwell
