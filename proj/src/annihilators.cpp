#include "holo/annihilators.hpp"

#include "holo/errors.hpp"

namespace holo {

SequenceStream unroll(const Recurrence& rec, const std::vector<Rational>& init, long N) {
  const int d = rec.order();
  if (static_cast<long>(init.size()) < d)
    throw InsufficientTerms("unroll needs " + std::to_string(d) + " initial terms");
  const std::size_t given = init.size();
  auto step = [rec, init, d, given](long m, const std::vector<Rational>& prefix) -> Rational {
    const long n = m - d;
    if (static_cast<std::size_t>(m) < given) {
      if (n >= 0) {
        std::vector<Rational> window(prefix.end() - d, prefix.end());
        window.push_back(init[static_cast<std::size_t>(m)]);
        if (rec.residual(n, window) != 0)
          throw InconsistentInitialTerms("initial term " + std::to_string(m) + " violates the recurrence");
      }
      return init[static_cast<std::size_t>(m)];
    }
    const Rational lead = rec.p(0)(Rational(n));
    if (lead == 0) throw LeadingCoefficientZero(n);
    Rational s = 0;
    for (int i = 1; i <= d; ++i) s += rec.p(i)(Rational(n)) * prefix[static_cast<std::size_t>(m - i)];
    return -s / lead;
  };
  SequenceStream s = SequenceStream::exact({}, step);
  if (N >= 0) s.exact_term(N);
  return s;
}

SequenceStream unroll(const Recurrence& rec, long N) { return unroll(rec, rec.initial_terms(), N); }

std::vector<Rational> apply(const Recurrence& rec, const SequenceStream& seq, long begin, long end) {
  const int d = rec.order();
  std::vector<Rational> out;
  if (end <= begin) return out;
  const auto u = seq.exact_prefix(static_cast<std::size_t>(end + d));
  for (long n = begin; n < end; ++n) {
    std::vector<Rational> window(u.begin() + n, u.begin() + n + d + 1);
    out.push_back(rec.residual(n, window));
  }
  return out;
}

std::vector<hp::BigReal> apply_real(const Recurrence& rec, const SequenceStream& seq, long begin, long end,
                                    hp::Bits bits) {
  const int d = rec.order();
  std::vector<hp::BigReal> out;
  for (long n = begin; n < end; ++n) {
    hp::BigReal s = hp::BigReal::from(0L, bits);
    for (int i = 0; i <= d; ++i)
      s = s + hp::BigReal::from(rec.p(i)(Rational(n)), bits) * seq.real_term(n + d - i, bits);
    out.push_back(s);
  }
  return out;
}

namespace {

OreDiff<Poly> multiply_by_power(const OreDiff<Poly>& op, long k) {
  std::vector<Poly> c = op.by_order();
  for (auto& p : c) p *= Poly::monomial(1, static_cast<std::size_t>(k));
  return OreDiff<Poly>(std::move(c));
}

}  // namespace

DiffOp rec_to_ode(const Recurrence& rec) {
  const int d = rec.order();
  if (d == 0) {
    if (nonnegative_integer_roots(rec.p(0)).empty()) return DiffOp({Poly(1)});
    ThetaOp t = ThetaOp::monomial(0, rec.p(0));
    auto [shift, op] = to_derivative_form(t);
    return DiffOp::from_ore(multiply_by_power(op, shift));
  }
  // a_k multiplies f_{n+k}.
  ThetaOp L;
  for (int k = 0; k <= d; ++k) L = L + ThetaOp::monomial(d - k, rec.p(d - k).shifted(-k));
  auto [shift, M] = to_derivative_form(L);
  OreDiff<Poly> op = shift >= 0 ? multiply_by_power(M, shift) : M;
  // shift < 0 cannot occur: all powers of z in L are nonnegative.

  const auto& init = rec.initial_terms();
  const OreDiff<Poly> D = OreDiff<Poly>::derivation();
  if (static_cast<int>(init.size()) < d) {
    OreDiff<Poly> out = op;
    for (int i = 0; i < d; ++i) out = D * out;
    return DiffOp::from_ore(out);
  }
  Poly R;
  for (int k = 1; k <= d; ++k)
    for (int m = 0; m < k; ++m)
      R += Poly::monomial(rec.p(d - k)(Rational(m - k)) * init[static_cast<std::size_t>(m)],
                          static_cast<std::size_t>(m + d - k));
  if (R.is_zero()) return DiffOp::from_ore(op);
  const OreDiff<Poly> left(std::vector<Poly>{-R.derivative(), R});
  return DiffOp::from_ore(left * op);
}

ThetaOp theta_form(const DiffOp& ode) {
  ThetaOp out;
  const auto ore = ode.to_ore();
  for (std::size_t i = 0; i < ore.by_order().size(); ++i) {
    const Poly ff = falling_factorial(i);
    const auto& c = ore.by_order()[i].coefficients();
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) out = out + ThetaOp::monomial(static_cast<long>(j) - static_cast<long>(i), c[j] * ff);
  }
  return out;
}

Recurrence ode_to_rec(const DiffOp& ode) {
  const ThetaOp t = theta_form(ode);
  const long kmin = t.min_power(), kmax = t.max_power();
  const long d = kmax - kmin;
  std::vector<Poly> p;
  for (long i = 0; i <= d; ++i) {
    // p_i multiplies f_{n+d-i}, which comes from the slice t^{kmin+i}.
    auto it = t.terms().find(kmin + i);
    p.push_back(it == t.terms().end() ? Poly() : it->second.shifted(Rational(d - i)));
  }
  return Recurrence(std::move(p));
}

RootReport singular_points(const DiffOp& ode) {
  if (ode.q(0).is_constant()) return {};
  return rational_roots(ode.q(0));
}

Series apply_to_series(const DiffOp& ode, const Series& y) {
  const int e = ode.order();
  if (static_cast<int>(y.length()) <= e) return Series(std::size_t{0});
  const std::size_t len = y.length() - static_cast<std::size_t>(e);
  Series out(len);
  Series deriv = y;
  for (int i = 0; i <= e; ++i) {
    const Series c = Series::from_poly(ode.coefficient_of_derivative(i), len);
    out = out + c * deriv.truncated(len);
    deriv = deriv.derivative();
  }
  return out;
}

}  // namespace holo
