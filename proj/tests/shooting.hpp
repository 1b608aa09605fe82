#pragma once

// Test-only oracle: classical RK4 shooting in long double on
// psi'' = (V(y) - E) psi over [0, edge], started from the parity condition at
// the origin and matched onto exp(-beta y). Shares nothing with the library
// beyond the geometry definition written out again here.

#include <algorithm>
#include <cmath>
#include <vector>

namespace shooting {

struct Well {
  double vbar0;
  double edge;  // 1 or 2
};

inline long double potential(const Well& w, long double y) {
  const long double r = std::fabs(y);
  if (r >= w.edge) return 0.0L;
  return -static_cast<long double>(w.vbar0) * (1.0L - r / w.edge);
}

struct Endpoint {
  long double psi, dpsi;
};

inline Endpoint integrate(const Well& w, long double e, bool even, int steps) {
  const long double h = static_cast<long double>(w.edge) / steps;
  long double y = 0.0L;
  long double p = even ? 1.0L : 0.0L;
  long double q = even ? 0.0L : 1.0L;
  auto acc = [&](long double yy, long double pp) { return (potential(w, yy) - e) * pp; };
  for (int i = 0; i < steps; ++i) {
    const long double k1p = q, k1q = acc(y, p);
    const long double k2p = q + 0.5L * h * k1q, k2q = acc(y + 0.5L * h, p + 0.5L * h * k1p);
    const long double k3p = q + 0.5L * h * k2q, k3q = acc(y + 0.5L * h, p + 0.5L * h * k2p);
    const long double k4p = q + h * k3q, k4q = acc(y + h, p + h * k3p);
    p += h / 6.0L * (k1p + 2 * k2p + 2 * k3p + k4p);
    q += h / 6.0L * (k1q + 2 * k2q + 2 * k3q + k4q);
    y = (i + 1) * h;
  }
  return {p, q};
}

// Normalized mismatch psi' + beta psi at the edge, as a function of beta.
inline long double mismatch(const Well& w, long double beta, bool even, int steps) {
  const Endpoint end = integrate(w, -beta * beta, even, steps);
  const long double a = end.dpsi, b = beta * end.psi;
  const long double n = std::sqrt(a * a + b * b);
  return n == 0.0L ? 0.0L : (a + b) / n;
}

// All bound-state energies, ascending.
inline std::vector<double> spectrum(const Well& w, int scan = 600, int coarse_steps = 2000,
                                    int fine_steps = 40000) {
  std::vector<double> out;
  const long double top = std::sqrt(static_cast<long double>(w.vbar0));
  for (bool even : {true, false}) {
    long double b0 = 0.0L;
    long double f0 = mismatch(w, b0, even, coarse_steps);
    for (int i = 1; i <= scan; ++i) {
      const long double b1 = top * i / scan;
      const long double f1 = mismatch(w, b1, even, coarse_steps);
      if ((f0 < 0) != (f1 < 0) && f0 != 0.0L) {
        long double lo = b0, hi = b1;
        long double flo = mismatch(w, lo, even, fine_steps);
        for (int k = 0; k < 200 && hi - lo > 1e-17L * hi; ++k) {
          const long double mid = 0.5L * (lo + hi);
          const long double fm = mismatch(w, mid, even, fine_steps);
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        const long double beta = 0.5L * (lo + hi);
        if (beta > 0.0L) out.push_back(static_cast<double>(-beta * beta));
      }
      b0 = b1;
      f0 = f1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Depth at which the n-th excited state reaches threshold: psi'(edge) = 0 at E = 0.
inline double critical_depth(int n, double edge, double lo, double hi, int steps = 20000) {
  const bool even = (n % 2 == 0);
  auto f = [&](double v) { return integrate(Well{v, edge}, 0.0L, even, steps).dpsi; };
  long double flo = f(lo);
  for (int k = 0; k < 200 && hi - lo > 1e-13; ++k) {
    const double mid = 0.5 * (lo + hi);
    const long double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace shooting
