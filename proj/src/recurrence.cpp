#include "holo/recurrence.hpp"

#include <sstream>

#include "holo/errors.hpp"

namespace holo {

std::vector<Poly> remove_joint_content(std::vector<Poly> ps) {
  Integer den = 1, num = 0;
  for (const auto& p : ps)
    for (const auto& c : p.coefficients()) den = lcm(den, Integer(c.get_den()));
  for (const auto& p : ps)
    for (const auto& c : p.coefficients()) num = gcd(num, Integer(c.get_num()));
  if (num == 0) return ps;
  Rational scale(den, num);
  scale.canonicalize();
  for (auto& p : ps) p *= scale;
  return ps;
}

namespace {

Poly common_factor(const std::vector<Poly>& ps) {
  Poly g;
  for (const auto& p : ps) g = gcd(g, p);
  return g;
}

void fix_sign(std::vector<Poly>& ps) {
  if (!ps.empty() && ps.front().leading() < 0)
    for (auto& p : ps) p = -p;
}

}  // namespace

Recurrence::Recurrence(std::vector<Poly> coeffs, std::vector<Rational> initial_terms)
    : initial_(std::move(initial_terms)) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
  if (coeffs.empty()) throw InvalidOperator("recurrence with all coefficients zero");
  if (coeffs.back().is_zero()) throw InvalidOperator("recurrence with p_d = 0");

  Poly g = common_factor(coeffs);
  for (long r : nonnegative_integer_roots(g)) {
    const Poly lin{Rational(-r), Rational(1)};
    while (g(Rational(r)) == 0) g = Poly::divexact(g, lin);
  }
  if (g.degree() > 0)
    for (auto& p : coeffs) p = Poly::divexact(p, g);
  coeffs_ = remove_joint_content(std::move(coeffs));
  fix_sign(coeffs_);
}

Recurrence Recurrence::with_initial_terms(std::vector<Rational> init) const {
  Recurrence r = *this;
  r.initial_ = std::move(init);
  return r;
}

int Recurrence::degree() const {
  int d = 0;
  for (const auto& p : coeffs_) d = std::max(d, p.degree());
  return d;
}

Rational Recurrence::residual(long n, const std::vector<Rational>& f) const {
  const int d = order();
  Rational s = 0;
  for (int i = 0; i <= d; ++i) s += coeffs_[i](Rational(n)) * f[static_cast<std::size_t>(d - i)];
  return s;
}

std::string Recurrence::to_string() const {
  std::ostringstream os;
  const int d = order();
  for (int i = 0; i <= d; ++i) {
    if (i) os << " + ";
    os << "(" << coeffs_[i].to_string('n') << ")*f(n";
    if (d - i) os << "+" << d - i;
    os << ")";
  }
  os << " = 0";
  return os.str();
}

DiffOp::DiffOp(std::vector<Poly> coeffs) {
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
  if (coeffs.empty()) throw InvalidOperator("differential operator with all coefficients zero");
  const Poly g = common_factor(coeffs);
  if (g.degree() > 0)
    for (auto& p : coeffs) p = Poly::divexact(p, g);
  coeffs_ = remove_joint_content(std::move(coeffs));
  fix_sign(coeffs_);
}

DiffOp DiffOp::from_ore(const OreDiff<Poly>& op) {
  std::vector<Poly> c(op.by_order().rbegin(), op.by_order().rend());
  return DiffOp(std::move(c));
}

DiffOp DiffOp::from_ore(const OreDiff<RatFun>& op) {
  Poly den = 1;
  for (const auto& c : op.by_order()) {
    const Poly& d = c.denominator();
    den = Poly::divexact(den * d, gcd(den, d));
  }
  std::vector<Poly> c;
  for (auto it = op.by_order().rbegin(); it != op.by_order().rend(); ++it)
    c.push_back(Poly::divexact(it->numerator() * den, it->denominator()));
  return DiffOp(std::move(c));
}

OreDiff<Poly> DiffOp::to_ore() const {
  return OreDiff<Poly>(std::vector<Poly>(coeffs_.rbegin(), coeffs_.rend()));
}

std::string DiffOp::to_string() const {
  std::ostringstream os;
  const int e = order();
  for (int k = 0; k <= e; ++k) {
    if (k) os << " + ";
    os << "(" << coeffs_[k].to_string('z') << ")*y";
    if (e - k) os << "^(" << e - k << ")";
  }
  os << " = 0";
  return os.str();
}

}  // namespace holo
