#include "holo/hpeval/real.hpp"

#include <climits>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "holo/errors.hpp"

namespace holo::hp {

Real::Real(Bits precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from(long v, Bits precision) {
  Real r(precision);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from(double v, Bits precision) {
  Real r(precision);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from(const Rational& q, Bits precision) {
  Real r(precision);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from(const Integer& z, Bits precision) {
  Real r(precision);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::rounded(Bits precision) const {
  Real r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

Real err_zero() { return Real(kErrorBits); }

Real half_ulp(const Real& v) {
  Real e(kErrorBits);
  if (v.is_zero()) return e;
  mpfr_set_ui_2exp(e.get(), 1, mpfr_get_exp(v.get()) - v.precision() - 1, MPFR_RNDU);
  return e;
}

Real abs_up(const Real& v) {
  Real e(kErrorBits);
  mpfr_abs(e.get(), v.get(), MPFR_RNDU);
  return e;
}

Real add_up(const Real& a, const Real& b) {
  Real e(kErrorBits);
  mpfr_add(e.get(), a.get(), b.get(), MPFR_RNDU);
  return e;
}

Real mul_up(const Real& a, const Real& b) {
  Real e(kErrorBits);
  mpfr_mul(e.get(), a.get(), b.get(), MPFR_RNDU);
  return e;
}

namespace {

Real abs_down(const Real& v) {
  Real e(kErrorBits);
  mpfr_abs(e.get(), v.get(), MPFR_RNDD);
  return e;
}

Real sub_down(const Real& a, const Real& b) {
  Real e(kErrorBits);
  mpfr_sub(e.get(), a.get(), b.get(), MPFR_RNDD);
  return e;
}

Real div_up(const Real& a, const Real& b) {
  Real e(kErrorBits);
  mpfr_div(e.get(), a.get(), b.get(), MPFR_RNDU);
  return e;
}

Bits result_precision(const BigReal& a, const BigReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigReal::BigReal(Bits precision) : value_(precision), error_(kErrorBits) {}

BigReal::BigReal(Real value, Real error) : value_(std::move(value)), error_(std::move(error)) {
  if (error_.precision() != kErrorBits) {
    Real e(kErrorBits);
    mpfr_set(e.get(), error_.get(), MPFR_RNDU);
    error_ = std::move(e);
  }
}

BigReal BigReal::from(const Rational& q, Bits precision) {
  Real v = Real::from(q, precision);
  Real e = half_ulp(v);
  return {std::move(v), std::move(e)};
}

BigReal BigReal::from(long v, Bits precision) {
  Real r = Real::from(v, precision);
  Real e = half_ulp(r);
  return {std::move(r), std::move(e)};
}

BigReal BigReal::with_error(Real value, double error) {
  Real e(kErrorBits);
  mpfr_set_d(e.get(), error, MPFR_RNDU);
  return {std::move(value), std::move(e)};
}

long BigReal::error_log2() const {
  if (error_.is_zero()) return LONG_MIN / 2;
  // error in [2^(e-1), 2^e): the bound 2^e always holds.
  return mpfr_get_exp(error_.get());
}

BigReal BigReal::widened(double extra) const {
  Real e(kErrorBits);
  mpfr_add_d(e.get(), error_.get(), extra, MPFR_RNDU);
  return {value_, std::move(e)};
}

BigReal BigReal::widened(const Real& extra) const { return {value_, add_up(error_, abs_up(extra))}; }

bool BigReal::agrees_with(const BigReal& other) const {
  Real diff(std::max(precision(), other.precision()) + 2);
  mpfr_sub(diff.get(), value_.get(), other.value_.get(), MPFR_RNDN);
  Real tol = add_up(add_up(error_, other.error_), half_ulp(diff));
  return mpfr_cmpabs(diff.get(), tol.get()) <= 0;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  Real v(result_precision(a, b));
  mpfr_add(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  Real e = add_up(add_up(a.error_, b.error_), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  Real v(result_precision(a, b));
  mpfr_sub(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  Real e = add_up(add_up(a.error_, b.error_), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal operator-(const BigReal& a) {
  Real v = a.value_;
  mpfr_neg(v.get(), v.get(), MPFR_RNDN);
  return {std::move(v), a.error_};
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  Real v(result_precision(a, b));
  mpfr_mul(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  Real e = add_up(mul_up(abs_up(a.value_), b.error_), mul_up(abs_up(b.value_), a.error_));
  e = add_up(add_up(e, mul_up(a.error_, b.error_)), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  Real lo = sub_down(abs_down(b.value_), b.error_);
  if (lo.sign() <= 0) throw PrecisionExhausted("division by a value not bounded away from zero");
  Real v(result_precision(a, b));
  mpfr_div(v.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
  // |a/b - a'/b'| <= (|a| eb + |b| ea) / (|b| (|b| - eb))
  Real num = add_up(mul_up(abs_up(a.value_), b.error_), mul_up(abs_up(b.value_), a.error_));
  Real den(kErrorBits);
  mpfr_mul(den.get(), abs_down(b.value_).get(), lo.get(), MPFR_RNDD);
  Real e = add_up(div_up(num, den), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal log(const BigReal& x) {
  Real lo = sub_down(x.value(), x.error());
  if (lo.sign() <= 0) throw PrecisionExhausted("log of a value not bounded away from zero");
  Real v(x.precision());
  mpfr_log(v.get(), x.value().get(), MPFR_RNDN);
  Real e = add_up(div_up(x.error(), lo), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal exp(const BigReal& x) {
  Real v(x.precision());
  mpfr_exp(v.get(), x.value().get(), MPFR_RNDN);
  // |e^{x'} - e^x| <= e^x (e^{ex} - 1)
  Real growth(kErrorBits);
  mpfr_expm1(growth.get(), x.error().get(), MPFR_RNDU);
  Real mag = abs_up(v);
  mpfr_mul_2si(mag.get(), mag.get(), 0, MPFR_RNDU);
  Real e = add_up(mul_up(mag, growth), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal sqrt(const BigReal& x) {
  if (x.value().sign() < 0) throw PrecisionExhausted("sqrt of a negative value");
  Real v(x.precision());
  mpfr_sqrt(v.get(), x.value().get(), MPFR_RNDN);
  Real lo = sub_down(x.value(), x.error());
  Real e(kErrorBits);
  if (lo.sign() > 0) {
    Real root(kErrorBits);
    mpfr_sqrt(root.get(), lo.get(), MPFR_RNDD);
    e = div_up(x.error(), root);
  } else {
    mpfr_sqrt(e.get(), x.error().get(), MPFR_RNDU);
  }
  e = add_up(e, half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal cos(const BigReal& x) {
  Real v(x.precision());
  mpfr_cos(v.get(), x.value().get(), MPFR_RNDN);
  Real e = add_up(x.error(), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal sin(const BigReal& x) {
  Real v(x.precision());
  mpfr_sin(v.get(), x.value().get(), MPFR_RNDN);
  Real e = add_up(x.error(), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal pow(const BigReal& x, const BigReal& y) { return exp(y * log(x)); }

BigReal abs(const BigReal& x) {
  Real v = x.value();
  mpfr_abs(v.get(), v.get(), MPFR_RNDN);
  return {std::move(v), x.error()};
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  Real v(std::max(x.precision(), y.precision()));
  mpfr_atan2(v.get(), y.value().get(), x.value().get(), MPFR_RNDN);
  Real r(kErrorBits);
  mpfr_hypot(r.get(), x.value().get(), y.value().get(), MPFR_RNDD);
  const Real spread = add_up(x.error(), y.error());
  const Real lo = sub_down(r, spread);
  if (lo.sign() <= 0) throw PrecisionExhausted("angle of a value not bounded away from zero");
  Real e = add_up(div_up(spread, lo), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal pi(Bits precision) {
  Real v(precision);
  mpfr_const_pi(v.get(), MPFR_RNDN);
  Real e = half_ulp(v);
  return {std::move(v), std::move(e)};
}

BigReal euler_gamma(Bits precision) {
  Real v(precision);
  mpfr_const_euler(v.get(), MPFR_RNDN);
  Real e = half_ulp(v);
  return {std::move(v), std::move(e)};
}

double BigComplex::abs_double() const {
  Real m(std::max(re.precision(), im.precision()));
  mpfr_hypot(m.get(), re.value().get(), im.value().get(), MPFR_RNDN);
  return m.to_double();
}

namespace {
std::mutex cap_mutex;
Bits cap_value = 0;
}  // namespace

Bits precision_cap() {
  std::lock_guard<std::mutex> lock(cap_mutex);
  if (cap_value == 0) {
    cap_value = 65536;
    if (const char* env = std::getenv("HOLO_PRECISION_CAP")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= MPFR_PREC_MIN) cap_value = v;
    }
  }
  return cap_value;
}

void set_precision_cap(Bits cap) {
  std::lock_guard<std::mutex> lock(cap_mutex);
  cap_value = cap;
}

}  // namespace holo::hp
