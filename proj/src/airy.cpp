#include "triwell/airy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "triwell/errors.hpp"

namespace triwell {
namespace {

using real = long double;

constexpr real kAi0 = 0.355028053887817239260063186004183176L;
constexpr real kAip0 = -0.258819403792806798405183560189203963L;
constexpr real kBi0 = 0.614926627446000735150922369093613554L;
constexpr real kBip0 = 0.448288357353826357914823710398828391L;

constexpr real kPi = std::numbers::pi_v<real>;

constexpr double kAsymptoticThreshold = 10.0;
constexpr real kAnchorSpacing = 0.25L;
constexpr int kAnchorsPerSide = 40;  // kAnchorsPerSide * kAnchorSpacing == kAsymptoticThreshold
constexpr int kAnchorCount = 2 * kAnchorsPerSide + 1;

struct Solution {
  real f;
  real fp;
};

struct Quad {
  real ai, aip, bi, bip;
};

// Propagates (f, f') of a solution of f'' = x f from x0 to x0 + h with the
// Taylor series about x0. Coefficients obey
//   c_{k+2} = (x0 c_k + c_{k-1}) / ((k+2)(k+1)).
Solution taylor_step(real x0, Solution s, real h) {
  real c_km1 = 0.0L;
  real c_k = s.f;
  real c_k1 = s.fp;
  real f = s.f + s.fp * h;
  real fp = s.fp;
  real h_pow = h;  // h^{k+1}
  int quiet = 0;
  for (int k = 0; k < 200; ++k) {
    const real c_k2 = (x0 * c_k + c_km1) / static_cast<real>((k + 2) * (k + 1));
    const real term_fp = static_cast<real>(k + 2) * c_k2 * h_pow;
    h_pow *= h;
    const real term_f = c_k2 * h_pow;
    f += term_f;
    fp += term_fp;
    const real scale = std::fabs(f) + std::fabs(fp);
    if (std::fabs(term_f) + std::fabs(term_fp) <= 1e-22L * scale) {
      if (++quiet == 3) break;
    } else {
      quiet = 0;
    }
    c_km1 = c_k;
    c_k = c_k1;
    c_k1 = c_k2;
  }
  return {f, fp};
}

// Sums of the asymptotic series in 1/zeta:
//   u = sum u_k t^k,  v = sum v_k t^k  (t = +-1/zeta, or split by parity).
// u_k = (6k-5)(6k-3)(6k-1) / (216 k (2k-1)) u_{k-1},  v_k = -(6k+1)/(6k-1) u_k.
// Truncated at the smallest term.
struct AsymptoticSums {
  real u_even, u_odd, v_even, v_odd;  // with alternating sign (-1)^j on index 2j / 2j+1
  real u_all, v_all;                  // plain sums, sign pattern (+t)^k
  real u_alt, v_alt;                  // sums with (-t)^k
};

AsymptoticSums asymptotic_sums(real zeta) {
  AsymptoticSums s{};
  const real inv = 1.0L / zeta;
  real u = 1.0L;
  real t_pow = 1.0L;
  real last_mag = INFINITY;
  for (int k = 0; k < 400; ++k) {
    if (k > 0) {
      const real kk = static_cast<real>(k);
      u *= (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / (216 * kk * (2 * kk - 1));
      t_pow *= inv;
    }
    const real v = (k == 0) ? 1.0L : -(6.0L * k + 1) / (6.0L * k - 1) * u;
    const real tu = u * t_pow;
    const real tv = v * t_pow;
    const real mag = std::fabs(tu) + std::fabs(tv);
    if (mag > last_mag) break;  // past the smallest term
    last_mag = mag;
    const real alt = (k % 2 == 0) ? 1.0L : -1.0L;
    s.u_all += tu;
    s.v_all += tv;
    s.u_alt += alt * tu;
    s.v_alt += alt * tv;
    // Index k = 2j (even) or 2j+1 (odd), sign (-1)^j.
    const real pair_sign = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
    if (k % 2 == 0) {
      s.u_even += pair_sign * tu;
      s.v_even += pair_sign * tv;
    } else {
      s.u_odd += pair_sign * tu;
      s.v_odd += pair_sign * tv;
    }
    if (mag < 1e-24L * (std::fabs(s.u_all) + std::fabs(s.v_all))) break;
  }
  return s;
}

// Scaled values for x > 0 (Ai family times e^{zeta}, Bi family times e^{-zeta}).
Quad asymptotic_positive_scaled(real x) {
  const real zeta = 2.0L / 3.0L * x * std::sqrt(x);
  const real x14 = std::sqrt(std::sqrt(x));
  const real rsqpi = 1.0L / std::sqrt(kPi);
  const AsymptoticSums s = asymptotic_sums(zeta);
  return {
      0.5L * rsqpi / x14 * s.u_alt,
      -0.5L * rsqpi * x14 * s.v_alt,
      rsqpi / x14 * s.u_all,
      rsqpi * x14 * s.v_all,
  };
}

// Unscaled values for x < 0 (modulus/phase form).
Quad asymptotic_negative(real x) {
  const real z = -x;
  const real zeta = 2.0L / 3.0L * z * std::sqrt(z);
  const real z14 = std::sqrt(std::sqrt(z));
  const real rsqpi = 1.0L / std::sqrt(kPi);
  const AsymptoticSums s = asymptotic_sums(zeta);
  const real theta = zeta - kPi / 4;
  const real c = std::cos(theta);
  const real sn = std::sin(theta);
  return {
      rsqpi / z14 * (c * s.u_even + sn * s.u_odd),
      rsqpi * z14 * (sn * s.v_even - c * s.v_odd),
      rsqpi / z14 * (-sn * s.u_even + c * s.u_odd),
      rsqpi * z14 * (c * s.v_even + sn * s.v_odd),
  };
}

struct AnchorTable {
  std::array<Quad, kAnchorCount> at{};  // index i <-> x = (i - kAnchorsPerSide) * spacing
};

AnchorTable build_anchor_table() {
  AnchorTable table;
  auto x_of = [](int i) { return static_cast<real>(i - kAnchorsPerSide) * kAnchorSpacing; };
  constexpr int kSubsteps = 4;
  const real sub = kAnchorSpacing / kSubsteps;

  table.at[kAnchorsPerSide] = {kAi0, kAip0, kBi0, kBip0};

  // Oscillatory side: both solutions propagate stably from the origin.
  for (int i = kAnchorsPerSide - 1; i >= 0; --i) {
    Solution a{table.at[i + 1].ai, table.at[i + 1].aip};
    Solution b{table.at[i + 1].bi, table.at[i + 1].bip};
    real x = x_of(i + 1);
    for (int s = 0; s < kSubsteps; ++s) {
      a = taylor_step(x, a, -sub);
      b = taylor_step(x, b, -sub);
      x -= sub;
    }
    table.at[i] = {a.f, a.fp, b.f, b.fp};
  }

  // Bi is dominant for x > 0: propagate forward from the origin.
  for (int i = kAnchorsPerSide + 1; i < kAnchorCount; ++i) {
    Solution b{table.at[i - 1].bi, table.at[i - 1].bip};
    real x = x_of(i - 1);
    for (int s = 0; s < kSubsteps; ++s) {
      b = taylor_step(x, b, sub);
      x += sub;
    }
    table.at[i].bi = b.f;
    table.at[i].bip = b.fp;
  }

  // Ai is recessive for x > 0: start from the asymptotic form at the far end
  // and propagate backward, where it is dominant.
  {
    const real x_end = x_of(kAnchorCount - 1);
    const Quad q = asymptotic_positive_scaled(x_end);
    const real decay = std::exp(-2.0L / 3.0L * x_end * std::sqrt(x_end));
    table.at[kAnchorCount - 1].ai = q.ai * decay;
    table.at[kAnchorCount - 1].aip = q.aip * decay;
    for (int i = kAnchorCount - 2; i > kAnchorsPerSide; --i) {
      Solution a{table.at[i + 1].ai, table.at[i + 1].aip};
      real x = x_of(i + 1);
      for (int s = 0; s < kSubsteps; ++s) {
        a = taylor_step(x, a, -sub);
        x -= sub;
      }
      table.at[i].ai = a.f;
      table.at[i].aip = a.fp;
    }
  }
  return table;
}

const AnchorTable& anchors() {
  static const AnchorTable table = build_anchor_table();
  return table;
}

Quad from_anchors(double x) {
  const int offset = static_cast<int>(std::lround(x / static_cast<double>(kAnchorSpacing)));
  const int i = offset + kAnchorsPerSide;
  const real x0 = static_cast<real>(offset) * kAnchorSpacing;
  const real h = static_cast<real>(x) - x0;
  const Quad& q = anchors().at[static_cast<std::size_t>(i)];
  if (h == 0.0L) return q;
  const Solution a = taylor_step(x0, {q.ai, q.aip}, h);
  const Solution b = taylor_step(x0, {q.bi, q.bip}, h);
  return {a.f, a.fp, b.f, b.fp};
}

void check_argument(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("airy: argument is not finite");
  }
  if (std::fabs(x) > kAiryMaxAbsArgument) {
    throw AiryRangeError("airy: argument " + std::to_string(x) +
                         " out of supported range |x| <= 1e4");
  }
}

}  // namespace

double airy_zeta(double x) {
  if (x <= 0.0) return 0.0;
  return 2.0 / 3.0 * x * std::sqrt(x);
}

ScaledAiryQuad airy_eval_scaled(double x) {
  check_argument(x);
  if (x >= kAsymptoticThreshold) {
    const Quad q = asymptotic_positive_scaled(x);
    return {x, static_cast<double>(q.ai), static_cast<double>(q.bi),
            static_cast<double>(q.aip), static_cast<double>(q.bip)};
  }
  if (x <= -kAsymptoticThreshold) {
    const Quad q = asymptotic_negative(x);
    return {x, static_cast<double>(q.ai), static_cast<double>(q.bi),
            static_cast<double>(q.aip), static_cast<double>(q.bip)};
  }
  const Quad q = from_anchors(x);
  if (x <= 0.0) {
    return {x, static_cast<double>(q.ai), static_cast<double>(q.bi),
            static_cast<double>(q.aip), static_cast<double>(q.bip)};
  }
  const real rx = x;
  const real zeta = 2.0L / 3.0L * rx * std::sqrt(rx);
  const real grow = std::exp(zeta);
  const real shrink = std::exp(-zeta);
  return {x, static_cast<double>(q.ai * grow), static_cast<double>(q.bi * shrink),
          static_cast<double>(q.aip * grow), static_cast<double>(q.bip * shrink)};
}

AiryQuad airy_eval(double x) {
  check_argument(x);
  if (x >= kAsymptoticThreshold) {
    const Quad q = asymptotic_positive_scaled(x);
    const real rx = x;
    const real zeta = 2.0L / 3.0L * rx * std::sqrt(rx);
    const real grow = std::exp(zeta);
    const real shrink = std::exp(-zeta);
    AiryQuad out{x, static_cast<double>(q.ai * shrink), static_cast<double>(q.bi * grow),
                 static_cast<double>(q.aip * shrink), static_cast<double>(q.bip * grow)};
    if (!std::isfinite(out.bi) || !std::isfinite(out.bi_prime)) {
      throw AiryRangeError("airy: Bi(" + std::to_string(x) +
                           ") overflows double range; use airy_eval_scaled");
    }
    return out;
  }
  const Quad q = (x <= -kAsymptoticThreshold) ? asymptotic_negative(x) : from_anchors(x);
  return {x, static_cast<double>(q.ai), static_cast<double>(q.bi), static_cast<double>(q.aip),
          static_cast<double>(q.bip)};
}

}  // namespace triwell
