#include "triwell/kernels.hpp"

namespace triwell::kernels {

std::vector<double> sample_residuals_serial(const DimensionlessWell& well, Parity parity,
                                            std::span<const double> betas) {
  std::vector<double> out(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    out[i] = parity_residual(well, parity, betas[i]);
  }
  return out;
}

std::vector<double> bisect_eigenvalues_serial(const FdOperator& op, std::int64_t count, double lo,
                                              double hi, double tol) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::int64_t k = 0; k < count; ++k) {
    out[static_cast<std::size_t>(k)] = op.eigenvalue(k, lo, hi, tol);
  }
  return out;
}

}  // namespace triwell::kernels
