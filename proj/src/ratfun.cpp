#include "holo/ratfun.hpp"

#include <stdexcept>

namespace holo {

RatFun::RatFun(const Poly& numerator, const Poly& denominator) : num_(numerator), den_(denominator) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divexact(num_, g);
      den_ = Poly::divexact(den_, g);
    }
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFun::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(x) / d;
}

RatFun RatFun::shifted(const Rational& c) const { return RatFun(num_.shifted(c), den_.shifted(c)); }

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::string RatFun::to_string(char var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFun evaluate(const Poly& p, const RatFun& r) {
  RatFun acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= r;
    acc += RatFun(*it);
  }
  return acc;
}

}  // namespace holo
