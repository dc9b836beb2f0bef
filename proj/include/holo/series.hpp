#pragma once

#include <cstddef>
#include <vector>

#include "holo/poly.hpp"

namespace holo {

/// Truncated power series over Q: the coefficients of z^0 .. z^{N-1}.
class Series {
 public:
  explicit Series(std::size_t length) : c_(length, Rational(0)) {}
  Series(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {}  // NOLINT
  static Series from_poly(const Poly& p, std::size_t length);

  std::size_t length() const { return c_.size(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  Series derivative() const;  // loses the last coefficient
  Series integral() const;    // constant term 0, keeps the length
  Series truncated(std::size_t length) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Rational& c, Series a);

  /// 1 / a; requires a[0] != 0.
  Series inverse() const;
  /// exp(a); requires a[0] == 0.
  Series exp() const;
  /// a(inner(z)); requires inner[0] == 0. Result length is min of both.
  Series compose(const Series& inner) const;

 private:
  std::vector<Rational> c_;
};

}  // namespace holo
