#include "holo/abelian.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "holo/errors.hpp"
#include "holo/hpeval/hpeval.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

std::string power(const std::string& base, const Rational& e) {
  if (e == 1) return base;
  return base + "^" + (e.get_den() == 1 && e > 0 ? to_string(e) : "(" + to_string(e) + ")");
}

}  // namespace

SingularElement transfer(const AsymptoticScale& scale, hp::Bits bits) {
  if (scale.alpha < 0) throw AlphaNegative(to_string(scale.alpha));
  SingularElement el;
  el.scale = scale;
  el.gamma_factor = hp::gamma(Rational(scale.alpha + 1), bits);
  el.pole_order = scale.alpha + 1;
  el.log_power = scale.beta;
  el.loglog_power = scale.gamma;
  return el;
}

Complex SingularElement::operator()(Complex z) const {
  const Complex L = -std::log(Complex(1) - z);
  Complex logv = static_cast<long double>(pole_order.get_d()) * L;
  if (log_power != 0 || scale.beta_imag != 0)
    logv += Complex(static_cast<long double>(log_power.get_d()), scale.beta_imag) * std::log(L);
  if (loglog_power != 0 || scale.gamma_imag != 0)
    logv += Complex(static_cast<long double>(loglog_power.get_d()), scale.gamma_imag) * std::log(std::log(L));
  return gamma_factor.value().to_long_double() * std::exp(logv);
}

std::string SingularElement::to_string() const {
  std::vector<std::string> num, den;
  const Rational g = scale.alpha + 1;
  if (g.get_den() != 1) num.push_back("Gamma(" + holo::to_string(g) + ")");
  else if (g > 2) num.push_back("Gamma(" + holo::to_string(g) + ")");
  auto place = [&](const std::string& base, const Rational& e, double imag) {
    if (e == 0 && imag == 0) return;
    if (imag != 0) {
      std::ostringstream os;
      os << base << "^(" << holo::to_string(e) << (imag > 0 ? "+" : "") << imag << "i)";
      num.push_back(os.str());
    } else if (e > 0) {
      num.push_back(power(base, e));
    } else {
      den.push_back(power(base, -e));
    }
  };
  place("(1-z)", -pole_order, 0);
  place("log(1/(1-z))", log_power, scale.beta_imag);
  place("log(log(1/(1-z)))", loglog_power, scale.gamma_imag);
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "*") + x;
    return s;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (!den.empty()) out += "/" + (den.size() == 1 ? den[0] : "(" + join(den) + ")");
  return out;
}

long transfer_truncation(int k) { return static_cast<long>(std::ceil(std::ldexp(1.0L, k) * k * k)); }

namespace {

TransferSample sample_at(const RealTerms& u, const SingularElement& el, long double theta, int k) {
  using LD = long double;
  TransferSample s;
  s.k = k;
  s.terms = transfer_truncation(k);
  const LD eps = std::ldexp(1.0L, -k);
  s.z = Complex(1) - eps * Complex(std::cos(theta), std::sin(theta));
  const Complex logz = std::log(s.z);
  // Powers by repeated multiplication, re-anchored from exp(n log z) every block.
  constexpr long kAnchor = 1024;
  Complex acc = 0, pw = 1;
  LD abs_sum = 0;
  for (long n = 0; n < s.terms; ++n) {
    if (n % kAnchor == 0) pw = std::exp(static_cast<LD>(n) * logz);
    const LD un = u(n);
    acc += un * pw;
    abs_sum += std::fabs(un) * std::abs(pw);
    pw *= s.z;
  }
  s.partial_sum = acc;
  s.element = el(s.z);
  const LD mag = std::abs(s.element);
  if (!std::isfinite(std::abs(acc)) || !std::isfinite(mag) || mag == 0)
    throw PrecisionExhausted("verify_transfer at k = " + std::to_string(k));
  s.ratio = std::abs(acc / s.element);
  const LD r = std::abs(s.z);
  const long m = static_cast<long>(std::ceil(el.scale.alpha.get_d())) + 1;
  const LD growth = r * std::exp(static_cast<LD>(m) / static_cast<LD>(s.terms));
  const LD uN = std::fabs(u(s.terms));
  s.tail_estimate = growth < 1 ? uN * std::pow(r, static_cast<LD>(s.terms)) / (1 - growth) / mag
                               : std::numeric_limits<LD>::infinity();
  s.rounding_estimate = 4 * static_cast<LD>(kAnchor + k * k + s.terms) * std::numeric_limits<LD>::epsilon() *
                        abs_sum / mag;
  return s;
}

}  // namespace

TransferReport verify_transfer(const RealTerms& u, const AsymptoticScale& scale, long double theta, int kmax,
                               int trend_from) {
  const SingularElement el = transfer(scale);
  TransferReport rep;
  rep.scale = scale;
  rep.element = el.to_string();
  rep.theta = theta;
  rep.trend_from = trend_from;
  const std::size_t count = kmax >= 4 ? static_cast<std::size_t>(kmax - 3) : 0;
  rep.samples.resize(count);
  parallel_for(count, [&](std::size_t i) { rep.samples[i] = sample_at(u, el, theta, static_cast<int>(i) + 4); });
  rep.trend_toward_one = true;
  long double last = std::numeric_limits<long double>::infinity();
  for (const auto& s : rep.samples) {
    if (s.k < trend_from) continue;
    const long double dev = std::fabs(s.ratio - 1);
    if (dev > last) rep.trend_toward_one = false;
    last = dev;
  }
  return rep;
}

}  // namespace holo
