#pragma once

#include <random>

#include "holo/annihilators.hpp"

namespace fixtures {

using holo::Poly;
using holo::Rational;
using holo::Recurrence;

inline Poly rnd_poly(std::mt19937& rng, int max_degree, int span = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-span, span);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

/// Random recurrence of order 1..max_order with p_0 free of nonnegative
/// integer roots and p_d != 0, plus small random initial terms.
inline Recurrence random_recurrence(std::mt19937& rng, int max_order, int max_degree = 2) {
  std::uniform_int_distribution<int> order(1, max_order), init(-3, 3), shift(1, 4);
  const int d = order(rng);
  std::vector<Poly> p;
  // p_0 = c (n + a)(n + b) with a, b > 0
  Poly lead = 1;
  const int lead_deg = std::uniform_int_distribution<int>(0, max_degree)(rng);
  for (int i = 0; i < lead_deg; ++i) lead *= Poly{Rational(shift(rng)), Rational(1)};
  p.push_back(lead);
  for (int i = 1; i <= d; ++i) {
    Poly q = rnd_poly(rng, max_degree);
    if (i == d && q.is_zero()) q = 1;
    p.push_back(q);
  }
  std::vector<Rational> iv;
  for (int i = 0; i < d; ++i) iv.emplace_back(init(rng));
  if (iv[0] == 0) iv[0] = 1;
  return Recurrence(std::move(p), std::move(iv));
}

}  // namespace fixtures
