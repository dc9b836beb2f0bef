#pragma once

#include <mpfr.h>

#include <string>

#include "holo/rational.hpp"

namespace holo::hp {

using Bits = mpfr_prec_t;

/// Owning wrapper around an mpfr_t. Precision is fixed at construction
/// and every operation rounds to nearest at the destination precision.
class Real {
 public:
  explicit Real(Bits precision = 64);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from(long v, Bits precision);
  static Real from(double v, Bits precision);
  static Real from(const Rational& q, Bits precision);
  static Real from(const Integer& z, Bits precision);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  Bits precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to another precision.
  Real rounded(Bits precision) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

 private:
  mpfr_t v_;
};

/// A real number known as midpoint plus an absolute error bound. The bound
/// is a short upward-rounded float; error_log2() exposes it as a power of two.
/// Bounds are propagated through every operation below, including the
/// rounding of the midpoint itself.
class BigReal {
 public:
  explicit BigReal(Bits precision = 64);
  BigReal(Real value, Real error);

  /// q rounded to the given precision, bound = rounding error.
  static BigReal from(const Rational& q, Bits precision);
  static BigReal from(long v, Bits precision);
  /// A value with an explicit bound (e.g. from a series truncation).
  static BigReal with_error(Real value, double error);

  const Real& value() const { return value_; }
  const Real& error() const { return error_; }
  Bits precision() const { return value_.precision(); }
  double to_double() const { return value_.to_double(); }
  double error_double() const { return error_.to_double(); }
  /// Smallest e with bound <= 2^e; a very negative sentinel when exact.
  long error_log2() const;
  /// Bound widened by a nonnegative amount.
  BigReal widened(double extra) const;
  BigReal widened(const Real& extra) const;

  /// |this - other| <= error() + other.error().
  bool agrees_with(const BigReal& other) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);

 private:
  Real value_;
  Real error_;
};

inline constexpr Bits kErrorBits = 32;

BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
/// x^y for x > 0, as exp(y log x).
BigReal pow(const BigReal& x, const BigReal& y);
BigReal abs(const BigReal& x);
/// Angle of (x, y); the bound uses |d angle| <= |dz| / |z|.
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pi(Bits precision);
BigReal euler_gamma(Bits precision);

/// Complex number with BigReal parts.
struct BigComplex {
  BigReal re, im;
  double abs_double() const;
};

/// Global cap on working precision; initialised from HOLO_PRECISION_CAP
/// when set, otherwise 65536 bits.
Bits precision_cap();
void set_precision_cap(Bits cap);

// Upward-rounded helpers on error magnitudes.
Real err_zero();
/// Half an ulp of v at its precision (the RNDN rounding error).
Real half_ulp(const Real& v);
Real abs_up(const Real& v);
Real add_up(const Real& a, const Real& b);
Real mul_up(const Real& a, const Real& b);

}  // namespace holo::hp
