#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/ore.hpp"
#include "holo/poly.hpp"

namespace holo {

/// p_0(n) f_{n+d} + p_1(n) f_{n+d-1} + ... + p_d(n) f_n = 0 for n >= 0.
///
/// Always stored normalized: leading zero polynomials are dropped, the
/// joint rational content is removed, common factors with no nonnegative
/// integer root are cancelled and p_0 has a positive leading coefficient.
/// Common factors that vanish at some n >= 0 are kept, since cancelling
/// them would change which sequences are annihilated.
class Recurrence {
 public:
  Recurrence() = default;
  explicit Recurrence(std::vector<Poly> coeffs, std::vector<Rational> initial_terms = {});

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& p(std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational>& initial_terms() const { return initial_; }
  Recurrence with_initial_terms(std::vector<Rational> init) const;
  /// Max degree over the coefficients.
  int degree() const;

  /// p_0(n) f_{n+d} + ... + p_d(n) f_n for the given window f_n..f_{n+d}.
  Rational residual(long n, const std::vector<Rational>& f) const;

  std::string to_string() const;
  friend bool operator==(const Recurrence& a, const Recurrence& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Poly> coeffs_;
  std::vector<Rational> initial_;
};

/// q_0(z) y^{(e)} + q_1(z) y^{(e-1)} + ... + q_e(z) y = 0.
///
/// Stored normalized: polynomial gcd and rational content removed, q_0
/// with positive leading coefficient.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Poly> coeffs);
  /// From sum_i c_i(z) D^i.
  static DiffOp from_ore(const OreDiff<Poly>& op);
  /// From rational coefficients, clearing denominators.
  static DiffOp from_ore(const OreDiff<RatFun>& op);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& q(std::size_t k) const { return coeffs_[k]; }
  /// Coefficient of y^{(i)}.
  const Poly& coefficient_of_derivative(int i) const { return coeffs_[order() - i]; }
  OreDiff<Poly> to_ore() const;

  std::string to_string() const;
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Poly> coeffs_;
};

/// Polynomials with the joint rational content removed (integer
/// coefficients with gcd 1); signs are untouched.
std::vector<Poly> remove_joint_content(std::vector<Poly> ps);

}  // namespace holo
