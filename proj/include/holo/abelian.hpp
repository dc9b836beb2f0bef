#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "holo/hpeval/real.hpp"
#include "holo/scale.hpp"

namespace holo {

using Complex = std::complex<long double>;

/// Gamma(alpha+1) (1-z)^{-1} phi(1/(1-z)) for phi(x) = x^alpha (log x)^beta (log log x)^gamma.
struct SingularElement {
  AsymptoticScale scale;
  hp::BigReal gamma_factor;
  Rational pole_order;
  Rational log_power;
  Rational loglog_power;

  /// Principal branches; z inside the unit disc near 1.
  Complex operator()(Complex z) const;
  std::string to_string() const;
};

/// Throws AlphaNegative when scale.alpha < 0.
SingularElement transfer(const AsymptoticScale& scale, hp::Bits bits = 128);

/// Terms must be safe to call concurrently.
using RealTerms = std::function<long double(long)>;

struct TransferSample {
  int k = 0;
  long terms = 0;
  Complex z;
  Complex partial_sum;
  Complex element;
  long double ratio = 0;
  /// Bound on the omitted tail relative to |element|, assuming
  /// |u_{N+j}| <= |u_N| ((N+j)/N)^m with m = ceil(alpha) + 1.
  long double tail_estimate = 0;
  /// Accumulated floating-point error relative to |element|.
  long double rounding_estimate = 0;
};

struct TransferReport {
  AsymptoticScale scale;
  std::string element;
  long double theta;
  std::vector<TransferSample> samples;
  /// |ratio - 1| nonincreasing over the samples with k >= trend_from.
  bool trend_toward_one = false;
  int trend_from = 8;
};

long transfer_truncation(int k);

/// Partial sums sum_{n<N_k} u_n z^n at z = 1 - 2^{-k} e^{i theta}, k = 4..kmax,
/// N_k = ceil(2^k k^2), compared with the transferred singular element.
TransferReport verify_transfer(const RealTerms& u, const AsymptoticScale& scale, long double theta, int kmax,
                               int trend_from = 8);

}  // namespace holo
