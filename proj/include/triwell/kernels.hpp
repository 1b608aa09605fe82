#pragma once

// Data-parallel inner loops of the solver and the oracle. Each kernel has a
// plain serial reference implementation and an OpenMP implementation; the
// two must agree bit for bit (tests/test_kernels.cpp, bench/).

#include <cstdint>
#include <span>
#include <vector>

#include "triwell/eigen.hpp"
#include "triwell/fd_operator.hpp"

namespace triwell::kernels {

/// parity_residual(well, parity, beta) at every beta.
std::vector<double> sample_residuals_serial(const DimensionlessWell& well, Parity parity,
                                            std::span<const double> betas);
std::vector<double> sample_residuals_parallel(const DimensionlessWell& well, Parity parity,
                                              std::span<const double> betas);

/// Eigenvalues 0..count-1 of op by independent Sturm bisections on [lo, hi].
std::vector<double> bisect_eigenvalues_serial(const FdOperator& op, std::int64_t count, double lo,
                                              double hi, double tol);
std::vector<double> bisect_eigenvalues_parallel(const FdOperator& op, std::int64_t count,
                                                double lo, double hi, double tol);

inline std::vector<double> sample_residuals(Execution exec, const DimensionlessWell& well,
                                            Parity parity, std::span<const double> betas) {
  return exec == Execution::serial ? sample_residuals_serial(well, parity, betas)
                                   : sample_residuals_parallel(well, parity, betas);
}

inline std::vector<double> bisect_eigenvalues(Execution exec, const FdOperator& op,
                                              std::int64_t count, double lo, double hi,
                                              double tol) {
  return exec == Execution::serial ? bisect_eigenvalues_serial(op, count, lo, hi, tol)
                                   : bisect_eigenvalues_parallel(op, count, lo, hi, tol);
}

}  // namespace triwell::kernels
