#include "triwell/fd_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace triwell {

FdOperator::FdOperator(double half_domain, std::int64_t grid_points,
                       const std::function<double(double)>& potential, Walls walls)
    : half_domain_(half_domain), walls_(walls), grid_points_(grid_points) {
  if (!(half_domain > 0.0) || grid_points < 3) {
    throw std::invalid_argument("FdOperator: need half_domain > 0 and at least 3 grid points");
  }
  spacing_ = 2.0 * half_domain / static_cast<double>(grid_points - 1);
  const double inv_h2 = 1.0 / (spacing_ * spacing_);
  off_squared_ = inv_h2 * inv_h2;
  const std::int64_t first = (walls == Walls::dirichlet) ? 1 : 0;
  const std::int64_t unknowns = grid_points - 2 * first;
  diagonal_.resize(static_cast<std::size_t>(unknowns));
  const std::int64_t mid = (grid_points - 1) / 2;
  min_diagonal_ = std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < unknowns; ++i) {
    // Measured from the centre so y = 0 and symmetric nodes are exact.
    const double y = static_cast<double>(i + first - mid) * spacing_;
    diagonal_[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + potential(y);
    min_diagonal_ = std::min(min_diagonal_, diagonal_[static_cast<std::size_t>(i)]);
  }
  pivmin_ = std::numeric_limits<double>::min() * std::max(1.0, 2.0 * off_squared_);
}

std::int64_t FdOperator::count_below(double sigma) const {
  std::int64_t negatives = 0;
  const std::size_t n = diagonal_.size();
  const double edge_coupling = (walls_ == Walls::neumann) ? 2.0 * off_squared_ : off_squared_;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      q = diagonal_[0] - sigma;
    } else {
      const double c = (i == 1 || i == n - 1) ? edge_coupling : off_squared_;
      q = (diagonal_[i] - sigma) - c / q;
    }
    if (std::fabs(q) < pivmin_) q = -pivmin_;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

double FdOperator::eigenvalue(std::int64_t k, double lo, double hi, double tol) const {
  for (int i = 0; i < 400 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace triwell
