#include "triwell/wavefn.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "triwell/airy.hpp"
#include "triwell/errors.hpp"
#include "triwell/quadrature.hpp"

namespace triwell {
namespace {

// c Ai(w) + d Bi(w) and its w-derivative, through the scaled functions so
// that the recessive and dominant parts combine without overflow.
struct Combination {
  double value;
  double slope;
};

Combination combine(double c, double d, double w) {
  if (w <= 0.0) {
    const AiryQuad q = airy_eval(w);
    return {c * q.ai + d * q.bi, c * q.ai_prime + d * q.bi_prime};
  }
  const ScaledAiryQuad q = airy_eval_scaled(w);
  const double zeta = airy_zeta(w);
  const double down = std::exp(-zeta);
  const double up = std::exp(zeta);
  return {c * q.ai_s * down + d * q.bi_s * up, c * q.ai_prime_s * down + d * q.bi_prime_s * up};
}

// Right interior branch (0 <= r <= edge) of a normalized state.
Combination interior(const PiecewiseState& s, double r) {
  return combine(s.coeffs[3], s.coeffs[4], s.cbrt_a * r + s.w0);
}

double relative(double a, double b, double scale) {
  const double diff = std::fabs(a - b);
  return scale > 0.0 ? diff / scale : diff;
}

double interval_integral(const PiecewiseState& a, const PiecewiseState& b, double lo, double hi) {
  auto f = [&](double y) { return evaluate(a, y) * evaluate(b, y); };
  // Scale the absolute tolerance to the integrand's size on a coarse grid.
  double peak = 0.0;
  for (int i = 0; i <= 16; ++i) peak = std::max(peak, std::fabs(f(lo + (hi - lo) * i / 16.0)));
  const double tol = kQuadratureTolerance * std::max(peak * (hi - lo), 1e-300);
  return adaptive_simpson(f, lo, hi, tol);
}

}  // namespace

PiecewiseState build_state(const DimensionlessWell& well, const EigenState& state) {
  const MatchPoints m = match_points(well, state.ebar);
  const AiryQuad centre = airy_eval(m.w0);
  double c, d;
  if (state.parity == Parity::even) {
    c = centre.bi_prime;
    d = -centre.ai_prime;
  } else {
    c = centre.bi;
    d = -centre.ai;
  }

  const Combination at_edge = combine(c, d, m.w2);
  const double slope_in = m.cbrt_a * at_edge.slope;
  const double slope_out = -m.beta * at_edge.value;
  const double scale =
      std::max({std::fabs(slope_in), std::fabs(slope_out), std::fabs(at_edge.value)});
  if (relative(slope_in, slope_out, scale) > kEdgeSlopeTolerance) {
    throw DomainError("build_state: energy " + std::to_string(state.ebar) +
                      " is not a bound state of this well (edge slope mismatch)");
  }

  PiecewiseState s;
  s.well = well;
  s.n = state.n;
  s.ebar = state.ebar;
  s.parity = state.parity;
  s.cbrt_a = m.cbrt_a;
  s.w0 = m.w0;
  s.beta = m.beta;
  s.coeffs = {0.0, 0.0, 0.0, c, d, 0.0};
  s.edge_value = at_edge.value;

  // Unnormalized norm^2: the interior by quadrature, the tails
  // 2 * psi(edge)^2 / (2 beta) in closed form.
  const double norm2 = norm_integral(s);
  s.norm = std::sqrt(norm2);

  const Combination at_centre = combine(c, d, m.w0);
  const double gauge = (state.parity == Parity::even) ? at_centre.value : at_centre.slope;
  const double factor = (gauge < 0.0 ? -1.0 : 1.0) / s.norm;
  const double p = s.parity_sign();
  s.coeffs[3] = c * factor;
  s.coeffs[4] = d * factor;
  s.coeffs[1] = p * s.coeffs[3];
  s.coeffs[2] = p * s.coeffs[4];
  s.edge_value = at_edge.value * factor;
  s.coeffs[5] = s.edge_value * std::exp(m.beta * well.edge());
  s.coeffs[0] = p * s.coeffs[5];
  return s;
}

double evaluate(const PiecewiseState& s, double y) {
  const double r = std::fabs(y);
  const double sign = (y < 0.0) ? s.parity_sign() : 1.0;
  if (r >= s.edge()) {
    return sign * s.edge_value * std::exp(-s.beta * (r - s.edge()));
  }
  return sign * interior(s, r).value;
}

double evaluate_derivative(const PiecewiseState& s, double y) {
  const double r = std::fabs(y);
  // psi(y) = p psi(|y|) for y < 0, so psi'(y) = -p psi'(|y|).
  const double sign = (y < 0.0) ? -s.parity_sign() : 1.0;
  if (r >= s.edge()) {
    return sign * -s.beta * s.edge_value * std::exp(-s.beta * (r - s.edge()));
  }
  return sign * s.cbrt_a * interior(s, r).slope;
}

std::pair<double, double> sample_range(const PiecewiseState& s) {
  const double reach = s.edge() + 5.0 / s.beta;
  return {-reach, reach};
}

int count_nodes(const PiecewiseState& s, int grid_points) {
  if (grid_points < 1001) throw std::invalid_argument("count_nodes: grid_points must be >= 1001");
  const auto [lo, hi] = sample_range(s);
  int nodes = 0;
  double last = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double y = lo + (hi - lo) * i / (grid_points - 1);
    const double v = evaluate(s, y);
    if (std::fabs(v) < 1e-12) continue;
    if (last != 0.0 && (v > 0) != (last > 0)) ++nodes;
    last = v;
  }
  return nodes;
}

double overlap(const PiecewiseState& a, const PiecewiseState& b) {
  const double edge = a.edge();
  const double inner =
      interval_integral(a, b, -edge, 0.0) + interval_integral(a, b, 0.0, edge);
  // Each tail: psi_a(edge) psi_b(edge) / (beta_a + beta_b); the left one
  // carries the product of the parity signs.
  const double tail = a.edge_value * b.edge_value / (a.beta + b.beta);
  return inner + tail * (1.0 + a.parity_sign() * b.parity_sign());
}

double norm_integral(const PiecewiseState& s) { return overlap(s, s); }

double Continuity::worst() const {
  double w = 0.0;
  for (int i = 0; i < 3; ++i) w = std::max({w, value[i], slope[i]});
  return w;
}

Continuity continuity(const PiecewiseState& s) {
  Continuity out;
  const double edge = s.edge();
  const double p = s.parity_sign();

  // +edge: interior branch against the exterior exponential.
  const Combination in = interior(s, edge);
  const double v_in = in.value, d_in = s.cbrt_a * in.slope;
  const double v_out = s.edge_value, d_out = -s.beta * s.edge_value;
  const double scale_edge =
      std::max({std::fabs(v_in), std::fabs(v_out), std::fabs(d_in), std::fabs(d_out)});
  // -edge is the mirror image: values carry p, slopes carry -p on both sides.
  out.value[0] = relative(p * v_in, p * v_out, scale_edge);
  out.slope[0] = relative(-p * d_in, -p * d_out, scale_edge);
  out.value[2] = relative(v_in, v_out, scale_edge);
  out.slope[2] = relative(d_in, d_out, scale_edge);

  // Origin: right branch against its mirror image.
  const Combination c = interior(s, 0.0);
  const double v_r = c.value, d_r = s.cbrt_a * c.slope;
  const double v_l = p * v_r, d_l = -p * d_r;
  const double scale_0 = std::max({std::fabs(v_r), std::fabs(d_r)});
  out.value[1] = relative(v_l, v_r, scale_0);
  out.slope[1] = relative(d_l, d_r, scale_0);
  return out;
}

double matching_determinant(const DimensionlessWell& well, double ebar) {
  const MatchPoints m = match_points(well, ebar);
  const AiryQuad e = airy_eval(m.w2);
  const AiryQuad o = airy_eval(m.w0);
  const double ca = m.cbrt_a;
  const double beta = m.beta;
  // Unknowns: C1 e^{-beta edge}, C2, C3, C4, C5, C6 e^{-beta edge}.
  Eigen::Matrix<double, 6, 6> mat;
  mat << 1.0, -e.ai, -e.bi, 0.0, 0.0, 0.0,                         //
      beta, ca * e.ai_prime, ca * e.bi_prime, 0.0, 0.0, 0.0,         //
      0.0, o.ai, o.bi, -o.ai, -o.bi, 0.0,                            //
      0.0, -ca * o.ai_prime, -ca * o.bi_prime, -ca * o.ai_prime, -ca * o.bi_prime, 0.0,  //
      0.0, 0.0, 0.0, e.ai, e.bi, -1.0,                               //
      0.0, 0.0, 0.0, ca * e.ai_prime, ca * e.bi_prime, beta;
  for (int r = 0; r < 6; ++r) {
    const double row_max = mat.row(r).cwiseAbs().maxCoeff();
    if (row_max > 0.0) mat.row(r) /= row_max;
  }
  return mat.partialPivLu().determinant();
}

}  // namespace triwell
