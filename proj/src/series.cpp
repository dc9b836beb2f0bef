#include "holo/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace holo {

Series Series::from_poly(const Poly& p, std::size_t length) {
  Series s(length);
  for (std::size_t k = 0; k < length; ++k) s.c_[k] = p[k];
  return s;
}

Series Series::derivative() const {
  if (c_.empty()) return Series(0);
  Series d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d.c_[k - 1] = c_[k] * static_cast<long>(k);
  return d;
}

Series Series::integral() const {
  Series s(c_.size());
  for (std::size_t k = 1; k < c_.size(); ++k) s.c_[k] = c_[k - 1] / static_cast<long>(k);
  return s;
}

Series Series::truncated(std::size_t length) const {
  Series s(length);
  for (std::size_t k = 0; k < std::min(length, c_.size()); ++k) s.c_[k] = c_[k];
  return s;
}

Series operator+(const Series& a, const Series& b) {
  Series s(std::min(a.length(), b.length()));
  for (std::size_t k = 0; k < s.length(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
  return s;
}

Series operator-(const Series& a, const Series& b) {
  Series s(std::min(a.length(), b.length()));
  for (std::size_t k = 0; k < s.length(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
  return s;
}

Series operator*(const Series& a, const Series& b) {
  Series s(std::min(a.length(), b.length()));
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < s.length(); ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return s;
}

Series operator*(const Rational& c, Series a) {
  for (auto& x : a.c_) x *= c;
  return a;
}

Series Series::inverse() const {
  if (c_.empty() || c_[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  Series r(c_.size());
  const Rational inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = -acc * inv0;
  }
  return r;
}

Series Series::exp() const {
  if (!c_.empty() && c_[0] != 0) throw std::domain_error("series exp needs a zero constant term");
  // E' = a' E, solved coefficient by coefficient.
  Series e(c_.size());
  if (c_.empty()) return e;
  e.c_[0] = 1;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * static_cast<long>(k) * e.c_[n - k];
    e.c_[n] = acc / static_cast<long>(n);
  }
  return e;
}

Series Series::compose(const Series& inner) const {
  if (!inner.c_.empty() && inner.c_[0] != 0)
    throw std::domain_error("series composition needs inner(0) == 0");
  const std::size_t len = std::min(length(), inner.length());
  const Series in = inner.truncated(len);
  Series acc(len);
  for (std::size_t k = len; k-- > 0;) {
    acc = acc * in;
    acc.c_[0] += c_[k];
  }
  return acc;
}

}  // namespace holo
