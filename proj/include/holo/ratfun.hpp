#pragma once

#include <string>

#include "holo/poly.hpp"

namespace holo {

/// Element of Q(X): reduced fraction with a monic denominator.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Poly& numerator) : num_(numerator), den_(1) {}  // NOLINT
  RatFun(const Rational& c) : num_(c), den_(1) {}              // NOLINT
  RatFun(long c) : RatFun(Rational(c)) {}                      // NOLINT
  RatFun(const Poly& numerator, const Poly& denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value at x; throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;
  RatFun shifted(const Rational& c) const;
  RatFun derivative() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(RatFun a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 'n') const;

 private:
  void reduce();
  Poly num_, den_;
};

/// p(r) for a polynomial p and a rational function r.
RatFun evaluate(const Poly& p, const RatFun& r);

}  // namespace holo
