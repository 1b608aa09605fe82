#include <exception>

#include "triwell/kernels.hpp"

namespace triwell::kernels {

std::vector<double> sample_residuals_parallel(const DimensionlessWell& well, Parity parity,
                                              std::span<const double> betas) {
  const long n = static_cast<long>(betas.size());
  std::vector<double> out(betas.size());
  std::vector<std::exception_ptr> errors(betas.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = parity_residual(well, parity, betas[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<double> bisect_eigenvalues_parallel(const FdOperator& op, std::int64_t count,
                                                double lo, double hi, double tol) {
  std::vector<double> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = op.eigenvalue(k, lo, hi, tol);
  }
  return out;
}

}  // namespace triwell::kernels
