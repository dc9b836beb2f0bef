#include "holo/ore.hpp"

#include <algorithm>

namespace holo {

ThetaOp ThetaOp::monomial(long k, const Poly& p) {
  ThetaOp op;
  op.add(k, p);
  return op;
}

void ThetaOp::add(long k, const Poly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

int ThetaOp::theta_degree() const {
  int d = -1;
  for (const auto& [k, p] : terms_) d = std::max(d, p.degree());
  return d;
}

ThetaOp operator+(const ThetaOp& a, const ThetaOp& b) {
  ThetaOp r = a;
  for (const auto& [k, p] : b.terms_) r.add(k, p);
  return r;
}

ThetaOp operator-(const ThetaOp& a, const ThetaOp& b) {
  ThetaOp r = a;
  for (const auto& [k, p] : b.terms_) r.add(k, -p);
  return r;
}

ThetaOp operator*(const ThetaOp& a, const ThetaOp& b) {
  ThetaOp r;
  for (const auto& [ka, pa] : a.terms_)
    for (const auto& [kb, pb] : b.terms_) r.add(ka + kb, pa.shifted(Rational(kb)) * pb);
  return r;
}

Poly falling_factorial(std::size_t i) {
  Poly p(1);
  for (std::size_t j = 0; j < i; ++j) p *= Poly{Rational(-static_cast<long>(j)), Rational(1)};
  return p;
}

Poly rising_factorial(std::size_t i) {
  Poly p(1);
  for (std::size_t j = 0; j < i; ++j) p *= Poly{Rational(static_cast<long>(j)), Rational(1)};
  return p;
}

std::pair<long, OreDiff<Poly>> to_derivative_form(const ThetaOp& op) {
  if (op.is_zero()) return {0, OreDiff<Poly>()};
  const int deg = op.theta_degree();
  // Stirling numbers of the second kind: theta^m = sum_l S(m,l) t^l D^l.
  const auto n = static_cast<std::size_t>(deg + 1);
  std::vector<std::vector<Rational>> S(n, std::vector<Rational>(n, Rational(0)));
  S[0][0] = 1;
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t l = 1; l <= m; ++l) S[m][l] = static_cast<long>(l) * S[m - 1][l] + S[m - 1][l - 1];
  const long shift = op.min_power();
  std::vector<Poly> coeffs(static_cast<std::size_t>(deg + 1));
  for (const auto& [k, p] : op.terms()) {
    for (int m = 0; m <= p.degree(); ++m) {
      const Rational c = p[static_cast<std::size_t>(m)];
      if (c == 0) continue;
      for (int l = 0; l <= m; ++l) {
        const Rational s = S[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
        if (s == 0) continue;
        coeffs[static_cast<std::size_t>(l)] +=
            Poly::monomial(c * s, static_cast<std::size_t>(k - shift + l));
      }
    }
  }
  return {shift, OreDiff<Poly>(std::move(coeffs))};
}

}  // namespace holo
