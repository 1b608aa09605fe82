#pragma once

// Airy functions Ai, Bi and their derivatives for real arguments.
//
// Evaluation regimes:
//   |x| < 10   Taylor expansion about the nearest point of a precomputed
//              anchor table (spacing 1/4), built once in extended precision.
//   |x| >= 10  Asymptotic expansions (exponential form for x > 0,
//              modulus/phase form for x < 0), truncated at the smallest term.
//
// Accuracy is better than 1e-13 relative across both regimes (absolute, on
// the oscillatory side, relative to the local amplitude).

namespace triwell {

struct AiryQuad {
  double x = 0.0;
  double ai = 0.0;
  double bi = 0.0;
  double ai_prime = 0.0;
  double bi_prime = 0.0;
};

/// Exponent-scaled values: for x > 0 the Ai family is multiplied by e^{+zeta}
/// and the Bi family by e^{-zeta}, zeta = (2/3) x^{3/2}. For x <= 0 the values
/// are unscaled.
struct ScaledAiryQuad {
  double x = 0.0;
  double ai_s = 0.0;
  double bi_s = 0.0;
  double ai_prime_s = 0.0;
  double bi_prime_s = 0.0;
};

/// Largest |x| accepted by either evaluator.
inline constexpr double kAiryMaxAbsArgument = 1e4;

/// zeta = (2/3) x^{3/2} for x > 0, and 0 otherwise (the scaling exponent).
double airy_zeta(double x);

/// Throws std::invalid_argument for non-finite x and AiryRangeError when
/// |x| > kAiryMaxAbsArgument or Bi/Bi' overflow (x above roughly 104).
AiryQuad airy_eval(double x);

/// Throws std::invalid_argument for non-finite x and AiryRangeError when
/// |x| > kAiryMaxAbsArgument.
ScaledAiryQuad airy_eval_scaled(double x);

}  // namespace triwell
