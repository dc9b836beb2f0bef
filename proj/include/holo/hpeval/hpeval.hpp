#pragma once

#include <functional>

#include "holo/hpeval/real.hpp"
#include "holo/rational.hpp"

namespace holo::hp {

/// k -> f(k) at a requested working precision.
using PointwiseReal = std::function<BigReal(long k, Bits bits)>;

/// Wraps f with a memo that keeps the highest-precision value per index
/// and rounds it down for cheaper requests. Thread-safe.
PointwiseReal cached(PointwiseReal f);

/// log k with the convention log 0 = 0.
BigReal log_term(long k, Bits bits);

/// Working precision for an n-term alternating binomial sum with target
/// accuracy 2^-target_bits: n + g + 2 ceil(log2(n + 2)).
Bits binomial_sum_precision(long n, long target_bits);

/// sum_{k=k0}^n binom(n,k) (-1)^k f(k), k0 = 0 or 1, with |error| <= 2^-g.
/// Precision starts at binomial_sum_precision and is raised until the
/// propagated bound meets the target; PrecisionExhausted past the cap.
BigReal binomial_diff_eval(const PointwiseReal& f, long n, long target_bits, bool include_k0 = false);

struct ComplexExponent {
  Rational re, im;
};

/// w_n = sum_{k=1}^n binom(n,k) (-1)^k k^alpha with k^alpha = exp(alpha log k).
BigComplex power_diff_eval(const ComplexExponent& alpha, long n, long target_bits);

/// Gamma(x) by Stirling's series after shifting the argument upwards,
/// with the reflection formula below 1/2. Throws PoleAtNonpositiveInteger.
BigReal gamma(const BigReal& x);
/// Gamma at a rational point.
BigReal gamma(const Rational& x, Bits bits);
/// Gamma(re + i im) by the complex Stirling series (re shifted to the
/// right half plane, reflection for re < 1/2).
BigComplex gamma(const ComplexExponent& z, Bits bits);

inline constexpr Bits kLambertGuardBits = 8;

/// Principal branch W(x) for x >= e by Newton's method seeded with
/// log x - log log x. The result carries kLambertGuardBits bits beyond
/// the precision of x, so w e^w reproduces x to about that precision.
BigReal lambert_w(const BigReal& x);

/// Exact H_n = 1 + 1/2 + ... + 1/n (H_0 = 0) by binary splitting.
Rational harmonic(long n);
/// H_n from the asymptotic expansion (exact summation for small n).
BigReal harmonic_real(long n, Bits bits);

/// Exact Bernoulli number B_{2j}.
Rational bernoulli_even(long j);

}  // namespace holo::hp
