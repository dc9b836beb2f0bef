#pragma once

#include <string>

#include "holo/rational.hpp"

namespace holo {

/// phi(x) = x^alpha (log x)^beta (log log x)^gamma. Real rational parts;
/// beta and gamma may carry imaginary parts, which are accepted but
/// marked experimental.
struct AsymptoticScale {
  Rational alpha, beta, gamma;
  double beta_imag = 0;
  double gamma_imag = 0;

  bool experimental() const { return beta_imag != 0 || gamma_imag != 0; }
  std::string to_string() const;
};

}  // namespace holo
