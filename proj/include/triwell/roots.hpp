#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "triwell/errors.hpp"

namespace triwell {

struct RootResult {
  double root = 0.0;
  double value = 0.0;  // f(root)
  double lo = 0.0;     // final bracket
  double hi = 0.0;
  int iterations = 0;
};

/// Brent-Dekker refinement of a sign-change bracket: inverse quadratic
/// interpolation or secant steps, safeguarded by bisection whenever the
/// interpolant leaves the bracket or converges too slowly.
///
/// Stops when the bracket half-width drops below xtol (plus a few ulps of the
/// iterate) or f hits zero exactly. Throws ConvergenceError carrying the last
/// bracket after max_iterations.
template <class F>
RootResult refine_bracket(F&& f, double a, double b, double fa, double fb, double xtol,
                          int max_iterations = 200) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (fa == 0.0) return {a, fa, a, a, 0};
  if (fb == 0.0) return {b, fb, b, b, 0};
  if ((fa > 0) == (fb > 0)) {
    throw ConvergenceError("refine_bracket: endpoints do not bracket a sign change", a, b);
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) {
      return {b, fb, std::min(b, c), std::max(b, c), iter};
    }
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw ConvergenceError("refine_bracket: no convergence within iteration limit", std::min(b, c),
                         std::max(b, c));
}

/// Plain bisection on a sign change, to |hi - lo| <= xtol.
template <class F>
double bisect_sign_change(F&& f, double lo, double hi, double xtol, int max_iterations = 400) {
  double flo = f(lo);
  for (int i = 0; i < max_iterations && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace triwell
