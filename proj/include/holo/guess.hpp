#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/hpeval/real.hpp"
#include "holo/recurrence.hpp"

namespace holo {

/// Outcome of a bounded recurrence search. An empty recurrence means no
/// operator with order <= max_order and degree <= max_degree fits the
/// data; that is evidence, not proof.
struct GuessResult {
  std::optional<Recurrence> recurrence;
  int max_order = 0;
  int max_degree = 0;
  std::size_t terms_used = 0;
  std::size_t held_out = 0;
  /// Largest normalized residual over the held-out terms (float mode).
  double max_residual = 0;
  std::string warning;

  bool found() const { return recurrence.has_value(); }
};

inline constexpr std::size_t kHeldOutTerms = 20;

/// Smallest (order, degree) recurrence, order >= 1, annihilating every
/// supplied term exactly. A full-box rank test modulo a 62-bit prime
/// rejects quickly when no candidate exists. Throws InsufficientTerms
/// when fewer than (r+1)(d+1) + 20 terms are given.
GuessResult guess_exact(const std::vector<Rational>& terms, int max_order, int max_degree);

/// Same search on approximate terms: column-scaled elimination with
/// complete pivoting and a relative pivot threshold 2^-(prec/2). The last
/// 20 terms are held out; a candidate is accepted only when its normalized
/// residual |sum p_i(n) f_{n+d-i}| / max_i |p_i(n) f_{n+d-i}| stays within
/// residual_tol there. Coefficients are rounded to nearby small rationals
/// when that keeps the residuals within tolerance.
GuessResult guess_float(const std::vector<hp::BigReal>& terms, int max_order, int max_degree, double residual_tol);

}  // namespace holo
