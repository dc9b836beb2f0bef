#include "holo/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace holo {

Poly::Poly(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
    coeffs_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::shifted(const Rational& c) const {
  if (c == 0 || is_constant()) return *this;
  // Horner with (X + c) keeps everything exact.
  Poly acc;
  const Poly lin{c, Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::scaled_arg(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational pw = 1;
  for (auto& a : v) {
    a *= pw;
    pw *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += Poly(*it);
  }
  return acc;
}

int Poly::valuation() const {
  if (is_zero()) return -1;
  int v = 0;
  while (coeffs_[static_cast<std::size_t>(v)] == 0) ++v;
  return v;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Rational Poly::content() const {
  if (is_zero()) return 0;
  Integer g = 0, l = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  if (leading() < 0) r = -r;
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Rational inv = 1 / content();
  return *this * inv;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem(a.coeffs_);
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv = 1 / b.leading();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << holo::to_string(mag);
    if (k >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.is_zero() ? a : a.primitive();
  Poly y = b.is_zero() ? b : b.primitive();
  while (!y.is_zero()) {
    Poly r = Poly::divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  // Yun's algorithm.
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  Poly f = p.monic();
  Poly d = f.derivative();
  Poly a = gcd(f, d);
  Poly b = Poly::divexact(f, a);
  Poly c = Poly::divexact(d, a) - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    Poly g = gcd(b, c);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = Poly::divexact(b, g);
    c = Poly::divexact(c, g) - b.derivative();
    ++i;
  }
  return out;
}

namespace {

// Scale by a positive rational so the coefficients are coprime integers;
// signs are preserved, which the Sturm chain relies on.
Poly positive_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = abs(p.content());
  return p * (1 / c);
}

std::vector<Poly> sturm_chain(const Poly& s) {
  std::vector<Poly> chain{positive_primitive(s), positive_primitive(s.derivative())};
  while (chain.back().degree() > 0) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(positive_primitive(-r));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Rational roots of a square-free polynomial. Every rational root of a
// primitive integer polynomial has the form k / lc, so the grid points
// (2j+1)/(2 lc) are never roots and serve as Sturm evaluation points.
std::vector<Rational> squarefree_rational_roots(const Poly& squarefree) {
  std::vector<Rational> roots;
  if (squarefree.degree() < 1) return roots;
  const Poly s = squarefree.primitive();
  const Integer lc = s.leading().get_num();
  Rational bound = 0;
  for (int k = 0; k < s.degree(); ++k) bound = std::max(bound, Rational(abs(s[static_cast<std::size_t>(k)]) / abs(s.leading())));
  bound += 1;
  const auto chain = sturm_chain(s);
  auto grid = [&](const Integer& j) {
    Rational r(Integer(2 * j + 1), Integer(2 * lc));
    r.canonicalize();
    return r;
  };
  Integer hi_bound = Integer(bound * lc) + 2;
  struct Cell {
    Integer lo, hi;
    int vlo, vhi;
  };
  std::vector<Cell> stack;
  stack.push_back({-hi_bound - 1, hi_bound, sign_changes(chain, grid(-hi_bound - 1)),
                   sign_changes(chain, grid(hi_bound))});
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (c.vlo - c.vhi <= 0) continue;
    if (c.hi - c.lo == 1) {
      Rational cand(c.hi, lc);
      cand.canonicalize();
      if (s(cand) == 0) roots.push_back(cand);
      continue;
    }
    Integer mid = (c.lo + c.hi) / 2;
    if (mid == c.lo) mid = c.lo + 1;
    const int vmid = sign_changes(chain, grid(mid));
    stack.push_back({c.lo, mid, c.vlo, vmid});
    stack.push_back({mid, c.hi, vmid, c.vhi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

RootReport rational_roots(const Poly& p) {
  RootReport report;
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  for (auto& [factor, mult] : squarefree_decomposition(p)) {
    Poly rest = factor;
    for (const auto& r : squarefree_rational_roots(factor)) {
      report.rational.push_back({r, mult});
      rest = Poly::divexact(rest, Poly{-r, Rational(1)});
    }
    if (rest.degree() >= 1) report.nonrational.emplace_back(rest.monic(), mult);
  }
  std::sort(report.rational.begin(), report.rational.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return report;
}

std::vector<long> nonnegative_integer_roots(const Poly& p) {
  std::vector<long> out;
  if (p.degree() < 1) return out;
  for (const auto& r : rational_roots(p).rational)
    if (is_nonnegative_integer(r.value)) out.push_back(r.value.get_num().get_si());
  return out;
}

}  // namespace holo
