#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The coefficient vector never carries trailing zeros; the zero
/// polynomial has an empty vector and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);

  static Poly monomial(const Rational& c, std::size_t k);
  /// The polynomial X.
  static Poly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of X^k, zero beyond the degree.
  Rational operator[](std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  /// X -> X + c.
  Poly shifted(const Rational& c) const;
  /// X -> c*X.
  Poly scaled_arg(const Rational& c) const;
  Poly derivative() const;
  /// p(q(X)).
  Poly compose(const Poly& inner) const;
  /// Multiplicity of X as a factor (0 for nonzero constant term).
  int valuation() const;

  Poly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Poly primitive() const;
  /// The positive-leading rational c with *this == c * primitive().
  Rational content() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(long c, Poly a) { return a *= Rational(c); }
  friend Poly operator*(Poly a, long c) { return a *= Rational(c); }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// a / b when b divides a exactly; throws std::domain_error otherwise.
  static Poly divexact(const Poly& a, const Poly& b);

  std::string to_string(char var = 'n') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Square-free decomposition: pairs (factor, multiplicity) with the
/// factors square-free, pairwise coprime and monic.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

struct RationalRoot {
  Rational value;
  int multiplicity;
};

struct RootReport {
  std::vector<RationalRoot> rational;  // ascending by value
  /// Remaining factors without rational roots: (monic factor, multiplicity).
  std::vector<std::pair<Poly, int>> nonrational;
};

/// All rational roots of p (p != 0) with multiplicities, plus the leftover
/// square-free pieces that have no rational root.
RootReport rational_roots(const Poly& p);

/// Nonnegative integer roots of p, ascending, without multiplicity.
std::vector<long> nonnegative_integer_roots(const Poly& p);

}  // namespace holo
