#include "triwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "triwell/errors.hpp"
#include "triwell/kernels.hpp"

namespace triwell {
namespace {

// Negative eigenvalues are counted below this shift.
constexpr double kNegativeShift = -1e-12;

struct DomainSolution {
  std::vector<double> extrapolated;
  std::vector<std::vector<double>> levels;
  double error_estimate = 0.0;
};

std::int64_t level_points(std::int64_t base, int level) {
  return (base - 1) * (std::int64_t{1} << level) + 1;
}

DomainSolution solve_domain(const DimensionlessWell& well, double half_domain,
                            std::int64_t grid_points, int refine_levels, Execution exec) {
  std::vector<FdOperator> ops;
  ops.reserve(static_cast<std::size_t>(refine_levels));
  std::int64_t count = -1;
  for (int lev = 0; lev < refine_levels; ++lev) {
    ops.push_back(make_fd_operator(well, half_domain, level_points(grid_points, lev)));
    const std::int64_t c = ops.back().count_below(kNegativeShift);
    count = (count < 0) ? c : std::min(count, c);
  }

  DomainSolution out;
  const double lo = -well.vbar0() - 1.0;
  for (const auto& op : ops) {
    out.levels.push_back(
        kernels::bisect_eigenvalues(exec, op, count, lo, kNegativeShift, kOracleBisectionTol));
  }

  // Richardson table in h^2: T[i][j] = T[i][j-1] + (T[i][j-1] - T[i-1][j-1]) / (4^j - 1).
  out.extrapolated.resize(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < out.extrapolated.size(); ++k) {
    std::vector<double> row(out.levels.size());
    std::vector<double> prev_row;
    double last_increment = 0.0;
    for (std::size_t i = 0; i < out.levels.size(); ++i) {
      row.assign(i + 1, 0.0);
      row[0] = out.levels[i][k];
      double factor = 1.0;
      for (std::size_t j = 1; j <= i; ++j) {
        factor *= 4.0;
        row[j] = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - 1.0);
      }
      if (i > 0) last_increment = std::fabs(row[i] - row[i - 1]);
      prev_row = row;
    }
    out.extrapolated[k] = prev_row.back();
    out.error_estimate = std::max(out.error_estimate, last_increment);
  }
  return out;
}

bool stable(const DomainSolution& a, const DomainSolution& b) {
  if (a.extrapolated.empty() || a.extrapolated.size() != b.extrapolated.size()) return false;
  return std::fabs(a.extrapolated.front() - b.extrapolated.front()) < kOracleDomainTol &&
         std::fabs(a.extrapolated.back() - b.extrapolated.back()) < kOracleDomainTol;
}

}  // namespace

OracleConfig default_oracle_config(const DimensionlessWell& well) {
  if (well.vbar0() > 100.0) return {4.0, 4001, 3};
  if (well.vbar0() >= 1.0) return {8.0, 4001, 3};
  const double edge = well.edge();
  const double target = std::min(0.25 * edge, 0.004 / well.vbar0());
  // Keep y = 0 and y = +-edge on grid nodes.
  const double h = edge / std::ceil(edge / target);
  const double half_domain = h * std::ceil(std::max(8.0, 100.0 * h) / h);
  const auto points = static_cast<std::int64_t>(std::llround(2.0 * half_domain / h)) + 1;
  return {half_domain, points, 3};
}

void validate_config(const OracleConfig& config, const DimensionlessWell& well) {
  if (config.grid_points < 201 || config.grid_points % 2 == 0) {
    throw std::invalid_argument("oracle: grid_points must be odd and >= 201");
  }
  if (!(config.half_domain > well.edge()) || !std::isfinite(config.half_domain)) {
    throw std::invalid_argument("oracle: half_domain must exceed the well edge");
  }
  if (config.refine_levels < 2 || config.refine_levels > 8) {
    throw std::invalid_argument("oracle: refine_levels must lie in [2, 8]");
  }
}

FdOperator make_fd_operator(const DimensionlessWell& well, double half_domain,
                            std::int64_t grid_points, Walls walls) {
  return FdOperator(
      half_domain, grid_points, [&well](double y) { return potential_value(well, y); }, walls);
}

std::int64_t bound_state_count(const DimensionlessWell& well, const OracleConfig& config) {
  validate_config(config, well);
  return make_fd_operator(well, config.half_domain, config.grid_points, Walls::neumann)
      .count_below(kNegativeShift);
}

std::int64_t sturm_count(const DimensionlessWell& well, const OracleConfig& config, double ebar) {
  validate_config(config, well);
  if (!(ebar < 0.0)) throw DomainError("sturm_count: ebar must be negative");
  return make_fd_operator(well, config.half_domain, config.grid_points).count_below(ebar);
}

OracleSpectrum oracle_spectrum(const DimensionlessWell& well, const OracleConfig& config,
                               Execution exec) {
  validate_config(config, well);
  const double edge = well.edge();
  double half_domain = config.half_domain;
  std::int64_t points = config.grid_points;
  auto grow = [&](double required) {
    int factor = 2;
    while (half_domain * factor < required) factor *= 2;
    half_domain *= factor;
    points = (points - 1) * factor + 1;
  };

  const double beta_weak = 0.5 * well.vbar0() * edge;
  const double start = edge + 12.0 / beta_weak;
  if (half_domain < start) {
    half_domain /= 2.0;
    points = (points - 1) / 2 + 1;
    grow(start);
  }

  // Target count and a lower bound on the shallowest decay rate, both from
  // Neumann walls (their eigenvalues sit below the true ones).
  const FdOperator neumann =
      make_fd_operator(well, config.half_domain, config.grid_points, Walls::neumann);
  const std::int64_t target = neumann.count_below(kNegativeShift);
  double required = 0.0;
  if (target > 0) {
    const double shallow = neumann.eigenvalue(target - 1, -well.vbar0() - 1.0, kNegativeShift,
                                              kOracleBisectionTol);
    required = edge + 12.0 / std::sqrt(-shallow);
  }
  if (half_domain < required) {
    half_domain /= 2.0;
    points = (points - 1) / 2 + 1;
    grow(required);
  }

  DomainSolution prev = solve_domain(well, half_domain, points, config.refine_levels, exec);
  std::ostringstream trail;
  trail << "target=" << target << "; L=" << half_domain << " count=" << prev.extrapolated.size();
  for (int doubling = 1; doubling <= kOracleMaxDoublings; ++doubling) {
    required = 0.0;
    if (!prev.extrapolated.empty()) {
      required = edge + 12.0 / std::sqrt(-prev.extrapolated.back());
    }
    grow(required);
    DomainSolution cur = solve_domain(well, half_domain, points, config.refine_levels, exec);
    trail << "; L=" << half_domain << " count=" << cur.extrapolated.size();
    if (static_cast<std::int64_t>(cur.extrapolated.size()) >= target && stable(prev, cur)) {
      OracleSpectrum out;
      out.eigenvalues = std::move(cur.extrapolated);
      out.achieved_error_estimate = cur.error_estimate;
      out.levels = std::move(cur.levels);
      out.final_config = {half_domain, points, config.refine_levels};
      out.domain_doublings = doubling;
      out.bound_count = target;
      return out;
    }
    prev = std::move(cur);
  }
  throw OracleError("oracle: domain did not stabilize for V0=" + std::to_string(well.vbar0()) +
                    " (" + trail.str() + ")");
}

OracleSpectrum oracle_spectrum(const DimensionlessWell& well, Execution exec) {
  return oracle_spectrum(well, default_oracle_config(well), exec);
}

}  // namespace triwell
