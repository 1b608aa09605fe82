#pragma once

// Independent finite-difference eigensolver for the same wells. Shares no
// code with the Airy matching path beyond potential_value.

#include <cstdint>
#include <string>
#include <vector>

#include "triwell/execution.hpp"
#include "triwell/fd_operator.hpp"
#include "triwell/model.hpp"

namespace triwell {

struct OracleConfig {
  double half_domain = 8.0;        // L, walls at y = +-L
  std::int64_t grid_points = 4001; // nodes on [-L, L] including walls; odd
  int refine_levels = 3;           // grids h, h/2, ..., h/2^(levels-1)
};

/// L = 8, N = 4001, 3 levels; wells deeper than 100 use L = 4. Wells shallower
/// than 1 use a coarser spacing (up to edge/4), since their bound state
/// extends far beyond the well and only the domain size matters.
OracleConfig default_oracle_config(const DimensionlessWell& well);

/// Throws std::invalid_argument unless N is odd and >= 201, L > edge and
/// refine_levels >= 2.
void validate_config(const OracleConfig& config, const DimensionlessWell& well);

FdOperator make_fd_operator(const DimensionlessWell& well, double half_domain,
                            std::int64_t grid_points, Walls walls = Walls::dirichlet);

/// Number of bound states from the Neumann-wall operator on the base grid:
/// outside the well the zero-energy solution is linear, so its count below
/// zero does not depend on L (L > edge). Dirichlet walls push states within
/// ~1/L^2 of threshold up into the continuum instead.
std::int64_t bound_state_count(const DimensionlessWell& well, const OracleConfig& config);

/// Number of eigenvalues of the base-grid operator strictly below ebar.
std::int64_t sturm_count(const DimensionlessWell& well, const OracleConfig& config, double ebar);

struct OracleSpectrum {
  std::vector<double> eigenvalues;      // Richardson-extrapolated, ascending, all < 0
  double achieved_error_estimate = 0.0; // last extrapolation increment, max over states
  std::vector<std::vector<double>> levels;  // raw eigenvalues per grid level (coarse first)
  OracleConfig final_config;            // domain after stabilization
  int domain_doublings = 0;
  std::int64_t bound_count = 0;  // Neumann count the domain was grown to reach
};

/// Eigenvalue bisection tolerance on each grid level.
inline constexpr double kOracleBisectionTol = 1e-12;
/// Largest change of the deepest and shallowest eigenvalue accepted between
/// two successive domain sizes.
inline constexpr double kOracleDomainTol = 1e-9;
inline constexpr int kOracleMaxDoublings = 6;

/// Negative eigenvalues of -psi'' + V psi on [-L, L], extrapolated in h^2.
///
/// The domain starts at max(L, edge + 12/beta_weak), beta_weak = V0 edge / 2
/// being the weak-coupling decay rate, and then grows at fixed spacing
/// (N -> 2N - 1 per doubling, jumping further when the shallowest state needs
/// it) until it holds bound_state_count states and the deepest and shallowest
/// eigenvalues move less than kOracleDomainTol. Throws OracleError after
/// kOracleMaxDoublings.
OracleSpectrum oracle_spectrum(const DimensionlessWell& well, const OracleConfig& config,
                               Execution exec = Execution::parallel);
OracleSpectrum oracle_spectrum(const DimensionlessWell& well,
                               Execution exec = Execution::parallel);

}  // namespace triwell
