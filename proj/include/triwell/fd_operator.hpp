#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace triwell {

enum class Walls { dirichlet, neumann };

/// Three-point discretization of -d^2/dy^2 + V(y) on a uniform grid over
/// [-L, L]. With Dirichlet walls only the interior nodes are unknowns and the
/// matrix is symmetric tridiagonal with off-diagonal -1/h^2. With Neumann
/// walls the wall nodes are unknowns too (mirror ghost nodes); the wall rows
/// are symmetrized by a diagonal similarity, which doubles the squared
/// coupling next to each wall.
class FdOperator {
 public:
  /// grid_points counts the nodes including both walls (must be >= 3).
  FdOperator(double half_domain, std::int64_t grid_points,
             const std::function<double(double)>& potential, Walls walls = Walls::dirichlet);

  double half_domain() const noexcept { return half_domain_; }
  std::int64_t grid_points() const noexcept { return grid_points_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t size() const noexcept { return diagonal_.size(); }
  double min_diagonal() const noexcept { return min_diagonal_; }
  Walls walls() const noexcept { return walls_; }

  /// Number of eigenvalues strictly below sigma (Sturm sequence count of the
  /// LDL^T pivots of the shifted matrix; zero pivots are replaced by -pivmin).
  std::int64_t count_below(double sigma) const;

  /// k-th eigenvalue (0-based) by bisection on [lo, hi] to |hi - lo| <= tol.
  /// Requires count_below(lo) <= k < count_below(hi).
  double eigenvalue(std::int64_t k, double lo, double hi, double tol) const;

 private:
  double half_domain_;
  Walls walls_;
  std::int64_t grid_points_;
  double spacing_;
  double off_squared_;
  double pivmin_;
  double min_diagonal_;
  std::vector<double> diagonal_;
};

}  // namespace triwell
