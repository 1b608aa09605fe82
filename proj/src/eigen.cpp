#include "triwell/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "triwell/airy.hpp"
#include "triwell/errors.hpp"
#include "triwell/kernels.hpp"
#include "triwell/roots.hpp"

namespace triwell {
namespace {

constexpr double kPoleThreshold = 1e-300;
constexpr double kResidualTarget = 1e-13;

struct Bracket {
  Parity parity;
  double lo, hi;
  double f_lo, f_hi;
};

void check_window(const DimensionlessWell& well, double ebar) {
  if (!(ebar > -well.vbar0() && ebar < 0.0)) {
    throw DomainError("energy " + std::to_string(ebar) + " outside the bound window (-V0, 0)");
  }
}

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

double parity_residual(const DimensionlessWell& well, Parity parity, double beta) {
  const MatchPoints m = match_points_at_decay(well, beta);
  const AiryQuad centre = airy_eval(m.w0);
  const ScaledAiryQuad edge = airy_eval_scaled(m.w2);
  double c, d;
  if (parity == Parity::even) {
    c = centre.bi_prime;
    d = -centre.ai_prime;
  } else {
    c = centre.bi;
    d = -centre.ai;
  }
  // D = c X_A + d X_B with X_F = beta F(w2) + A^{1/3} F'(w2). X_B > 0 for
  // w2 >= 0, so D / (X_B hypot(c, d)) has the sign of D, stays within
  // [-2, 2], and its slope in beta does not grow like e^{2 zeta2}.
  const double x_a = m.beta * edge.ai_s + m.cbrt_a * edge.ai_prime_s;
  const double x_b = m.beta * edge.bi_s + m.cbrt_a * edge.bi_prime_s;
  const double ratio = std::exp(-2.0 * airy_zeta(m.w2)) * (x_a / x_b);
  return (c * ratio + d) / std::hypot(c, d);
}

double residual_even(const DimensionlessWell& well, double ebar) {
  check_window(well, ebar);
  return parity_residual(well, Parity::even, std::sqrt(-ebar));
}

double residual_odd(const DimensionlessWell& well, double ebar) {
  check_window(well, ebar);
  return parity_residual(well, Parity::odd, std::sqrt(-ebar));
}

RatioPQ ratios_pq(const DimensionlessWell& well, double ebar) {
  const MatchPoints m = match_points(well, ebar);
  const double ca = m.cbrt_a;
  const double beta = m.beta;
  const AiryQuad a1 = airy_eval(m.w1);
  const AiryQuad a2 = airy_eval(-m.w2);
  const double inf = std::numeric_limits<double>::infinity();

  RatioPQ r;
  const double p_num = beta * a1.bi - ca * a1.bi_prime;
  const double p_den = ca * a1.ai_prime - beta * a1.ai;
  r.p = (p_den == 0.0) ? std::copysign(inf, p_num) : p_num / p_den;
  const double q_num = beta * a2.bi + ca * a2.bi_prime;
  const double q_den = beta * a2.ai + ca * a2.ai_prime;
  r.q = (q_den == 0.0) ? -std::copysign(inf, q_num) : -(q_num / q_den);
  return r;
}

Eq26Value residual_eq26(const DimensionlessWell& well, double ebar) {
  const MatchPoints m = match_points(well, ebar);
  const double ca = m.cbrt_a;
  const double beta = m.beta;
  const AiryQuad a1 = airy_eval(m.w1);
  const AiryQuad a0 = airy_eval(m.w0);
  const AiryQuad am2 = airy_eval(-m.w2);
  // -w0 >= 0: numerator and denominator share the factor e^{zeta}, removed here.
  const ScaledAiryQuad am0 = airy_eval_scaled(-m.w0);
  const double recessive = std::exp(-2.0 * airy_zeta(-m.w0));

  const double x = beta * a1.bi - ca * a1.bi_prime;
  const double y = ca * a1.ai_prime - beta * a1.ai;
  const double lhs_num = x * a0.ai_prime + y * a0.bi_prime;
  const double lhs_den = x * a0.ai + y * a0.bi;

  const double u = beta * am2.bi + ca * am2.bi_prime;
  const double w = ca * am2.ai_prime + beta * am2.ai;
  const double rhs_num = u * am0.ai_prime_s * recessive - w * am0.bi_prime_s;
  const double rhs_den = u * am0.ai_s * recessive - w * am0.bi_s;

  Eq26Value out;
  if (std::fabs(lhs_den) < kPoleThreshold || std::fabs(rhs_den) < kPoleThreshold) {
    out.status = Eq26Status::pole;
    out.value = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.lhs = lhs_num / lhs_den;
  out.rhs = rhs_num / rhs_den;
  out.value = out.lhs - out.rhs;
  return out;
}

std::vector<Eq26Check> eq26_diagnostic(const Spectrum& spectrum) {
  std::vector<Eq26Check> out;
  out.reserve(spectrum.states.size());
  for (const auto& s : spectrum.states) {
    Eq26Check c;
    c.n = s.n;
    c.parity = s.parity;
    c.ebar = s.ebar;
    c.eq26 = residual_eq26(spectrum.well, s.ebar);
    c.consistent = c.eq26.status == Eq26Status::ok && std::fabs(c.eq26.value) <= kEq26Tolerance;
    out.push_back(c);
  }
  return out;
}

std::vector<double> eq26_roots(const DimensionlessWell& well, int grid, double tol) {
  if (grid < 2) throw std::invalid_argument("eq26_roots: grid must be >= 2");
  const double top = std::sqrt(well.vbar0());
  auto f = [&](double beta) {
    const Eq26Value v = residual_eq26(well, -beta * beta);
    return v.status == Eq26Status::ok ? v.value : std::numeric_limits<double>::quiet_NaN();
  };
  // Interior beta points only: both window ends are excluded.
  std::vector<double> betas(static_cast<std::size_t>(grid - 1));
  std::vector<double> values(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    betas[i] = top * static_cast<double>(i + 1) / grid;
    values[i] = f(betas[i]);
  }
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    const double fa = values[i], fb = values[i + 1];
    if (!std::isfinite(fa) || !std::isfinite(fb) || sign_of(fa) * sign_of(fb) >= 0.0) continue;
    const double xtol = tol / (2.0 * betas[i + 1]);
    try {
      const RootResult r = refine_bracket(f, betas[i], betas[i + 1], fa, fb, xtol);
      // Across a pole the function changes sign through infinity; a genuine
      // root leaves a small residual.
      if (std::isfinite(r.value) && std::fabs(r.value) <= kEq26Tolerance) {
        roots.push_back(-r.root * r.root);
      }
    } catch (const ConvergenceError&) {
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int bracket_grid_size(const DimensionlessWell& well) {
  return std::max(64, static_cast<int>(std::ceil(8.0 * std::sqrt(well.vbar0()))));
}

Spectrum solve_spectrum(const DimensionlessWell& well, double tol, Execution exec) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    throw std::invalid_argument("solve_spectrum: tolerance must lie in [1e-14, 1e-6]");
  }
  const int grid = bracket_grid_size(well);
  const double top = std::sqrt(well.vbar0());
  std::vector<double> betas(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) betas[static_cast<std::size_t>(i)] = top * i / (grid - 1);
  betas.back() = top;

  std::vector<Bracket> brackets;
  for (Parity parity : {Parity::even, Parity::odd}) {
    const std::vector<double> f = kernels::sample_residuals(exec, well, parity, betas);
    bool found = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      // An exact zero at an interior sample is its own bracket; zeros at
      // beta = 0 (threshold) or at the well bottom are not bound states.
      if (f[i] == 0.0 && i > 0) {
        brackets.push_back({parity, betas[i], betas[i], 0.0, 0.0});
        found = true;
      } else if (sign_of(f[i]) * sign_of(f[i + 1]) < 0.0) {
        brackets.push_back({parity, betas[i], betas[i + 1], f[i], f[i + 1]});
        found = true;
      }
    }
    // The ground state always exists; for very shallow wells its decay rate
    // can sit below the first grid cell, so search that cell geometrically.
    if (parity == Parity::even && !found) {
      double hi = betas[1];
      double f_hi = f[1];
      for (int k = 0; k < 200; ++k) {
        const double lo = 0.5 * hi;
        const double f_lo = parity_residual(well, parity, lo);
        if (sign_of(f_lo) * sign_of(f_hi) < 0.0) {
          brackets.push_back({parity, lo, hi, f_lo, f_hi});
          break;
        }
        hi = lo;
        f_hi = f_lo;
      }
    }
  }

  std::vector<EigenState> states(brackets.size());
  for_each_index(exec, brackets.size(), [&](std::size_t i) {
    const Bracket& b = brackets[i];
    auto f = [&](double beta) { return parity_residual(well, b.parity, beta); };
    double beta = b.lo;
    if (b.lo != b.hi) {
      const double xtol = tol / (2.0 * b.hi);
      RootResult r = refine_bracket(f, b.lo, b.hi, b.f_lo, b.f_hi, xtol);
      // Near threshold the residual is steep in beta; tighten until it is small.
      if (std::fabs(r.value) > kResidualTarget && r.lo < r.hi) {
        r = refine_bracket(f, r.lo, r.hi, f(r.lo), f(r.hi), 0.0);
      }
      beta = r.root;
    }
    EigenState s;
    s.ebar = -beta * beta;
    s.parity = b.parity;
    s.residual_abs = std::fabs(f(beta));
    states[i] = s;
  });

  std::sort(states.begin(), states.end(),
            [](const EigenState& a, const EigenState& b) { return a.ebar < b.ebar; });
  for (std::size_t i = 0; i < states.size(); ++i) {
    states[i].n = static_cast<int>(i);
    const Parity expected = (i % 2 == 0) ? Parity::even : Parity::odd;
    if (states[i].parity != expected) {
      throw SolverError("spectrum of V0=" + std::to_string(well.vbar0()) +
                        " breaks parity alternation at state " + std::to_string(i));
    }
    if (i > 0 && !(states[i].ebar > states[i - 1].ebar)) {
      throw SolverError("spectrum is not strictly increasing at state " + std::to_string(i));
    }
  }
  if (states.empty()) {
    throw SolverError("no bound state found for V0=" + std::to_string(well.vbar0()));
  }

  Spectrum out;
  out.well = well;
  out.states = std::move(states);
  out.bracket_grid_size = grid;
  out.tolerance = tol;
  return out;
}

double critical_depth(int n, Convention convention, double tol) {
  if (n < 1 || n > 8) throw std::invalid_argument("critical_depth: n must lie in [1, 8]");
  const Parity parity = (n % 2 == 1) ? Parity::odd : Parity::even;
  const int wanted = (n + 1) / 2;
  const double edge = DimensionlessWell(1.0, convention).edge();
  // At threshold the residual depends on the depth only through
  // s = A^{1/3} edge, so V0 = s^3 / edge^2 and the zeros are evenly resolved in s.
  auto depth_of = [edge](double s) { return s * s * s / (edge * edge); };
  auto threshold = [&](double vbar0) {
    return parity_residual(DimensionlessWell(vbar0, convention), parity, 0.0);
  };

  constexpr double kStep = 0.01;
  double s_prev = 0.01;
  double f_prev = threshold(depth_of(s_prev));
  int seen = 0;
  for (double s = s_prev + kStep; s < 40.0; s += kStep) {
    const double f = threshold(depth_of(s));
    if (sign_of(f) * sign_of(f_prev) < 0.0 || f == 0.0) {
      if (++seen == wanted) {
        if (f == 0.0) return depth_of(s);
        return bisect_sign_change(threshold, depth_of(s_prev), depth_of(s), tol);
      }
    }
    s_prev = s;
    f_prev = f;
  }
  throw SolverError("critical_depth: onset not found in scan range");
}

}  // namespace triwell
