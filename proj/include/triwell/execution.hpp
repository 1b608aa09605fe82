#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace triwell {

/// Selects the plain-loop reference path or the OpenMP path of a kernel.
/// Both produce bit-identical results.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, n). The parallel path captures exceptions per
/// index and rethrows the one with the lowest index, so failures are
/// reported the same way as in the serial path.
template <class Body>
void for_each_index(Execution exec, std::size_t n, Body&& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace triwell
