#include "triwell/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "triwell/errors.hpp"

namespace triwell {

std::string_view to_string(Convention c) {
  return c == Convention::eq1 ? "eq1" : "halfwidth2";
}

Convention parse_convention(std::string_view text) {
  if (text == "eq1") return Convention::eq1;
  if (text == "halfwidth2") return Convention::halfwidth2;
  throw std::invalid_argument("unknown convention '" + std::string(text) +
                              "' (expected eq1 or halfwidth2)");
}

DimensionlessWell::DimensionlessWell(double vbar0, Convention convention)
    : vbar0_(vbar0), convention_(convention) {
  if (!(vbar0 > 0.0) || !std::isfinite(vbar0)) {
    throw DomainError("well depth must be positive and finite, got " + std::to_string(vbar0));
  }
}

double energy_unit(const PhysicalWell& well) {
  const double fields[] = {well.mass, well.hbar, well.depth, well.half_width};
  for (double f : fields) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw DomainError("physical well parameters must be positive and finite");
    }
  }
  const double unit = well.hbar * well.hbar / (2.0 * well.mass * well.half_width * well.half_width);
  if (!(unit > 0.0) || !std::isfinite(unit)) {
    throw DomainError("energy unit hbar^2/(2 m a^2) is not a positive finite number");
  }
  return unit;
}

DimensionlessWell to_dimensionless(const PhysicalWell& well) {
  const double vbar0 = well.depth / energy_unit(well);
  if (!std::isfinite(vbar0) || !(vbar0 > 0.0)) {
    throw DomainError("dimensionless depth is not a positive finite number");
  }
  return DimensionlessWell(vbar0, Convention::eq1);
}

double to_physical_energy(const PhysicalWell& well, double ebar) {
  return ebar * energy_unit(well);
}

double to_dimensionless_energy(const PhysicalWell& well, double energy) {
  return energy / energy_unit(well);
}

double potential_value(const DimensionlessWell& well, double y) {
  const double r = std::fabs(y);
  const double edge = well.edge();
  if (r >= edge) return 0.0;
  return -well.vbar0() * (1.0 - r / edge);
}

MatchPoints match_points_at_decay(const DimensionlessWell& well, double beta) {
  const double top = std::sqrt(well.vbar0());
  if (!(beta >= 0.0) || beta > top) {
    throw DomainError("decay rate outside [0, sqrt(V0)]");
  }
  const double a = well.slope();
  const double cbrt_a = std::cbrt(a);
  MatchPoints m;
  m.cbrt_a = cbrt_a;
  m.beta = beta;
  // w2 = A^{1/3}(edge - B/A) = -E / A^{2/3}, computed without cancellation
  // near threshold; w0 and w1 follow by shifting one and two edge lengths.
  m.w2 = beta * beta / (cbrt_a * cbrt_a);
  const double span = cbrt_a * well.edge();
  m.w0 = m.w2 - span;
  m.w1 = m.w2 - 2.0 * span;
  return m;
}

MatchPoints match_points(const DimensionlessWell& well, double ebar) {
  if (!(ebar > -well.vbar0() && ebar < 0.0)) {
    throw DomainError("energy " + std::to_string(ebar) + " outside the bound window (-V0, 0)");
  }
  return match_points_at_decay(well, std::sqrt(-ebar));
}

}  // namespace triwell
