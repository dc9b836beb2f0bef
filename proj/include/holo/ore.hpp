#pragma once

#include <map>
#include <vector>

#include "holo/ratfun.hpp"

namespace holo {

/// Differential operator sum_i c_i(X) D^i with coefficients in a
/// differential ring C (Poly or RatFun), stored by ascending derivative
/// order. Multiplication follows D c = c D + c'.
template <class C>
class OreDiff {
 public:
  OreDiff() = default;
  explicit OreDiff(std::vector<C> by_order) : c_(std::move(by_order)) { trim(); }
  static OreDiff multiplication(const C& c) { return OreDiff(std::vector<C>{c}); }
  static OreDiff derivation() { return OreDiff(std::vector<C>{C(0), C(1)}); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& by_order() const { return c_; }
  C at(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }

  friend OreDiff operator+(const OreDiff& a, const OreDiff& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) + b.at(i);
    return OreDiff(std::move(v));
  }
  friend OreDiff operator-(const OreDiff& a, const OreDiff& b) {
    std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) - b.at(i);
    return OreDiff(std::move(v));
  }

  /// (sum a_i D^i)(sum b_j D^j) = sum_{i,j,l} a_i binom(i,l) b_j^{(l)} D^{i-l+j}.
  friend OreDiff operator*(const OreDiff& a, const OreDiff& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      C deriv = b.c_[j];
      for (std::size_t l = 0; l < a.c_.size() && !deriv.is_zero(); ++l) {
        Rational binom = 1;
        for (std::size_t i = l; i < a.c_.size(); ++i) {
          if (i > l) binom = binom * static_cast<long>(i) / static_cast<long>(i - l);
          if (!a.c_[i].is_zero()) v[i - l + j] += a.c_[i] * deriv * C(binom);
        }
        deriv = deriv.derivative();
      }
    }
    return OreDiff(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

/// Operator sum_k t^k P_k(theta) with theta = t d/dt, t^k written on the
/// left. k ranges over all integers, so Laurent coefficients are allowed.
class ThetaOp {
 public:
  ThetaOp() = default;
  static ThetaOp monomial(long k, const Poly& p);
  static ThetaOp theta() { return monomial(0, Poly::x()); }

  const std::map<long, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_power() const { return terms_.begin()->first; }
  long max_power() const { return terms_.rbegin()->first; }
  /// Highest theta-degree over all slices.
  int theta_degree() const;

  friend ThetaOp operator+(const ThetaOp& a, const ThetaOp& b);
  friend ThetaOp operator-(const ThetaOp& a, const ThetaOp& b);
  /// (t^a P(theta)) (t^b Q(theta)) = t^{a+b} P(theta + b) Q(theta).
  friend ThetaOp operator*(const ThetaOp& a, const ThetaOp& b);
  friend bool operator==(const ThetaOp& a, const ThetaOp& b) { return a.terms_ == b.terms_; }

 private:
  void add(long k, const Poly& p);
  std::map<long, Poly> terms_;
};

/// Falling factorial theta (theta-1) ... (theta-i+1).
Poly falling_factorial(std::size_t i);
/// Rising factorial theta (theta+1) ... (theta+i-1).
Poly rising_factorial(std::size_t i);

/// Rewrites sum_k t^k P_k(theta) as sum_l c_l(t) D^l with Laurent
/// coefficients, returned as (shift, operator): the true operator is
/// t^shift times the returned polynomial-coefficient operator.
std::pair<long, OreDiff<Poly>> to_derivative_form(const ThetaOp& op);

}  // namespace holo
