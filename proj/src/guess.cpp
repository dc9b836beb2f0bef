#include "holo/guess.hpp"

#include <algorithm>
#include <cmath>

#include "holo/errors.hpp"
#include "holo/matrix.hpp"

namespace holo {

namespace {

void check_length(std::size_t len, int r, int d) {
  const std::size_t need = static_cast<std::size_t>((r + 1) * (d + 1)) + kHeldOutTerms;
  if (len < need)
    throw InsufficientTerms("need at least " + std::to_string(need) + " terms for order " + std::to_string(r) +
                            ", degree " + std::to_string(d) + "; got " + std::to_string(len));
}

/// Rows n = 0..len-r-1, column i(d+1)+j holds n^j f_{n+r-i}.
Matrix<Rational> ansatz(const std::vector<Rational>& f, int r, int d) {
  const std::size_t rows = f.size() - static_cast<std::size_t>(r);
  Matrix<Rational> m(rows, static_cast<std::size_t>((r + 1) * (d + 1)));
  for (std::size_t n = 0; n < rows; ++n)
    for (int i = 0; i <= r; ++i) {
      Rational pw = 1;
      for (int j = 0; j <= d; ++j) {
        m(n, static_cast<std::size_t>(i * (d + 1) + j)) = pw * f[n + static_cast<std::size_t>(r - i)];
        pw *= static_cast<long>(n);
      }
    }
  return m;
}

std::vector<Poly> to_polys(const std::vector<Rational>& v, int r, int d) {
  std::vector<Poly> p;
  for (int i = 0; i <= r; ++i)
    p.emplace_back(std::vector<Rational>(v.begin() + i * (d + 1), v.begin() + (i + 1) * (d + 1)));
  return p;
}

bool proper(const std::vector<Poly>& p) { return !p.front().is_zero() && !p.back().is_zero(); }

}  // namespace

GuessResult guess_exact(const std::vector<Rational>& terms, int max_order, int max_degree) {
  check_length(terms.size(), max_order, max_degree);
  GuessResult out;
  out.max_order = max_order;
  out.max_degree = max_degree;
  out.terms_used = terms.size();
  if (std::all_of(terms.begin(), terms.end(), [](const Rational& x) { return x == 0; })) {
    out.recurrence = Recurrence({Poly(1), Poly(-1)});
    out.warning = "all terms are zero; every recurrence fits, reporting f(n+1) = f(n)";
    return out;
  }
  const auto full = rank_mod_p(ansatz(terms, max_order, max_degree));
  if (full && *full == static_cast<std::size_t>((max_order + 1) * (max_degree + 1))) return out;

  for (int r = 1; r <= max_order; ++r)
    for (int d = 0; d <= max_degree; ++d) {
      const Matrix<Rational> m = ansatz(terms, r, d);
      const auto rk = rank_mod_p(m);
      if (rk && *rk == m.cols()) continue;
      const auto kernel = nullspace(m);
      if (kernel.empty()) continue;
      std::vector<Rational> pick;
      for (const auto& v : kernel)
        if (proper(to_polys(v, r, d))) {
          pick = v;
          break;
        }
      if (pick.empty() && kernel.size() > 1) {
        pick.assign(kernel.front().size(), Rational(0));
        for (const auto& v : kernel)
          for (std::size_t k = 0; k < v.size(); ++k) pick[k] += v[k];
        if (!proper(to_polys(pick, r, d))) pick.clear();
      }
      if (pick.empty()) continue;
      Recurrence rec(to_polys(pick, r, d));
      long len = rec.order();
      for (long root : nonnegative_integer_roots(rec.p(0)))
        len = std::max(len, std::min<long>(root + rec.order() + 1, static_cast<long>(terms.size())));
      out.recurrence = rec.with_initial_terms({terms.begin(), terms.begin() + len});
      return out;
    }
  return out;
}

namespace {

using hp::Bits;
using hp::Real;

/// Right null vector by complete pivoting; empty when numerically full rank.
std::vector<Real> float_null_vector(std::vector<std::vector<Real>> a, Bits prec) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> colperm(cols);
  for (std::size_t j = 0; j < cols; ++j) colperm[j] = j;
  Real tmp(prec), best(prec), first(prec), threshold(prec);
  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    std::size_t bi = rank, bj = rank;
    mpfr_set_zero(best.get(), 1);
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (mpfr_cmpabs(a[i][j].get(), best.get()) > 0) {
          mpfr_abs(best.get(), a[i][j].get(), MPFR_RNDN);
          bi = i;
          bj = j;
        }
    if (rank == 0) {
      if (best.is_zero()) break;
      first = best;
      mpfr_mul_2si(threshold.get(), first.get(), -static_cast<long>(prec / 2), MPFR_RNDN);
    }
    if (mpfr_cmp(best.get(), threshold.get()) <= 0) break;
    std::swap(a[rank], a[bi]);
    if (bj != rank) {
      for (auto& row : a) std::swap(row[rank], row[bj]);
      std::swap(colperm[rank], colperm[bj]);
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][rank].is_zero()) continue;
      Real f(prec);
      mpfr_div(f.get(), a[i][rank].get(), a[rank][rank].get(), MPFR_RNDN);
      for (std::size_t j = rank; j < cols; ++j) {
        mpfr_mul(tmp.get(), f.get(), a[rank][j].get(), MPFR_RNDN);
        mpfr_sub(a[i][j].get(), a[i][j].get(), tmp.get(), MPFR_RNDN);
      }
    }
  }
  if (rank == cols) return {};
  // Free variable: the first non-pivot column set to 1, the rest 0.
  std::vector<Real> x(cols, Real(prec));
  mpfr_set_ui(x[rank].get(), 1, MPFR_RNDN);
  for (std::size_t k = rank; k-- > 0;) {
    Real s(prec);
    for (std::size_t j = k + 1; j < cols; ++j) {
      mpfr_mul(tmp.get(), a[k][j].get(), x[j].get(), MPFR_RNDN);
      mpfr_add(s.get(), s.get(), tmp.get(), MPFR_RNDN);
    }
    mpfr_div(x[k].get(), s.get(), a[k][k].get(), MPFR_RNDN);
    mpfr_neg(x[k].get(), x[k].get(), MPFR_RNDN);
  }
  std::vector<Real> out(cols, Real(prec));
  for (std::size_t j = 0; j < cols; ++j) out[colperm[j]] = x[j];
  return out;
}

/// Continued-fraction approximation of x with |x - p/q| <= tol, q <= qmax.
std::optional<Rational> small_rational(const Real& x, const Real& tol, const Integer& qmax) {
  const Bits prec = x.precision();
  Real rem = x, t(prec), approx(prec), diff(prec);
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 200; ++it) {
    mpfr_floor(t.get(), rem.get());
    Integer a;
    mpfr_get_z(a.get_mpz_t(), t.get(), MPFR_RNDN);
    const Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > qmax) return std::nullopt;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational q(h1, k1);
    q.canonicalize();
    mpfr_set_q(approx.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(diff.get(), approx.get(), x.get(), MPFR_RNDN);
    if (mpfr_cmpabs(diff.get(), tol.get()) <= 0) return q;
    mpfr_sub(rem.get(), rem.get(), t.get(), MPFR_RNDN);
    if (rem.is_zero()) return std::nullopt;
    mpfr_ui_div(rem.get(), 1, rem.get(), MPFR_RNDN);
  }
  return std::nullopt;
}

/// Max over the window of |sum_i p_i(n) f_{n+r-i}| / max_i |p_i(n) f_{n+r-i}|.
double held_out_residual(const std::vector<std::vector<Real>>& coeffs, const std::vector<hp::BigReal>& f, int r,
                         std::size_t begin, std::size_t end, Bits prec) {
  double worst = 0;
  Real s(prec), big(prec), term(prec), pv(prec), npow(prec), ratio(prec);
  for (std::size_t n = begin; n < end; ++n) {
    mpfr_set_zero(s.get(), 1);
    mpfr_set_zero(big.get(), 1);
    for (int i = 0; i <= r; ++i) {
      mpfr_set_zero(pv.get(), 1);
      mpfr_set_ui(npow.get(), 1, MPFR_RNDN);
      for (const auto& c : coeffs[static_cast<std::size_t>(i)]) {
        mpfr_mul(term.get(), c.get(), npow.get(), MPFR_RNDN);
        mpfr_add(pv.get(), pv.get(), term.get(), MPFR_RNDN);
        mpfr_mul_ui(npow.get(), npow.get(), n, MPFR_RNDN);
      }
      mpfr_mul(term.get(), pv.get(), f[n + static_cast<std::size_t>(r - i)].value().get(), MPFR_RNDN);
      mpfr_add(s.get(), s.get(), term.get(), MPFR_RNDN);
      if (mpfr_cmpabs(term.get(), big.get()) > 0) mpfr_abs(big.get(), term.get(), MPFR_RNDN);
    }
    if (big.is_zero()) continue;
    mpfr_div(ratio.get(), s.get(), big.get(), MPFR_RNDN);
    worst = std::max(worst, std::fabs(ratio.to_double()));
  }
  return worst;
}

}  // namespace

GuessResult guess_float(const std::vector<hp::BigReal>& terms, int max_order, int max_degree, double residual_tol) {
  check_length(terms.size(), max_order, max_degree);
  GuessResult out;
  out.max_order = max_order;
  out.max_degree = max_degree;
  out.terms_used = terms.size();
  out.held_out = kHeldOutTerms;
  Bits prec = 64;
  for (const auto& t : terms) prec = std::max(prec, t.precision());
  const std::size_t train = terms.size() - kHeldOutTerms;
  double best_residual = -1;

  for (int r = 1; r <= max_order; ++r)
    for (int d = 0; d <= max_degree; ++d) {
      const std::size_t cols = static_cast<std::size_t>((r + 1) * (d + 1));
      const std::size_t rows = train - static_cast<std::size_t>(r);
      std::vector<std::vector<Real>> a(rows, std::vector<Real>(cols, Real(prec)));
      Real pw(prec);
      for (std::size_t n = 0; n < rows; ++n)
        for (int i = 0; i <= r; ++i) {
          mpfr_set_ui(pw.get(), 1, MPFR_RNDN);
          for (int j = 0; j <= d; ++j) {
            mpfr_mul(a[n][static_cast<std::size_t>(i * (d + 1) + j)].get(), pw.get(),
                     terms[n + static_cast<std::size_t>(r - i)].value().get(), MPFR_RNDN);
            mpfr_mul_ui(pw.get(), pw.get(), n, MPFR_RNDN);
          }
        }
      // Column scaling to unit max norm.
      std::vector<Real> scale(cols, Real(prec));
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t n = 0; n < rows; ++n)
          if (mpfr_cmpabs(a[n][j].get(), scale[j].get()) > 0) mpfr_abs(scale[j].get(), a[n][j].get(), MPFR_RNDN);
        if (scale[j].is_zero()) mpfr_set_ui(scale[j].get(), 1, MPFR_RNDN);
        for (std::size_t n = 0; n < rows; ++n) mpfr_div(a[n][j].get(), a[n][j].get(), scale[j].get(), MPFR_RNDN);
      }
      std::vector<Real> v = float_null_vector(std::move(a), prec);
      if (v.empty()) continue;
      for (std::size_t j = 0; j < cols; ++j) mpfr_div(v[j].get(), v[j].get(), scale[j].get(), MPFR_RNDN);

      // Normalize by the largest coefficient.
      std::size_t ref = 0;
      for (std::size_t j = 1; j < cols; ++j)
        if (mpfr_cmpabs(v[j].get(), v[ref].get()) > 0) ref = j;
      const Real refv = v[ref];
      for (auto& x : v) mpfr_div(x.get(), x.get(), refv.get(), MPFR_RNDN);

      std::vector<std::vector<Real>> coeffs(static_cast<std::size_t>(r + 1));
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= d; ++j) coeffs[static_cast<std::size_t>(i)].push_back(v[static_cast<std::size_t>(i * (d + 1) + j)]);
      const double res = held_out_residual(coeffs, terms, r, train - static_cast<std::size_t>(r),
                                           terms.size() - static_cast<std::size_t>(r), prec);
      if (best_residual < 0 || res < best_residual) best_residual = res;
      if (!(res <= residual_tol)) continue;

      // Rationalize: small continued-fraction convergents, else the float itself.
      Real tol(prec);
      mpfr_set_ui_2exp(tol.get(), 1, -static_cast<long>(prec / 3), MPFR_RNDN);
      Integer qmax = 1;
      qmax <<= static_cast<unsigned long>(prec / 8);
      std::vector<Rational> q;
      bool all_small = true;
      for (const auto& x : v) {
        auto s = small_rational(x, tol, qmax);
        if (!s) {
          all_small = false;
          break;
        }
        q.push_back(*s);
      }
      if (all_small) {
        std::vector<std::vector<Real>> qc(static_cast<std::size_t>(r + 1));
        for (int i = 0; i <= r; ++i)
          for (int j = 0; j <= d; ++j)
            qc[static_cast<std::size_t>(i)].push_back(Real::from(q[static_cast<std::size_t>(i * (d + 1) + j)], prec));
        const double qres = held_out_residual(qc, terms, r, 0, terms.size() - static_cast<std::size_t>(r), prec);
        if (qres <= residual_tol) {
          out.max_residual = qres;
        } else {
          all_small = false;
        }
      }
      if (!all_small) {
        q.clear();
        for (const auto& x : v) {
          Rational e;
          mpfr_get_q(e.get_mpq_t(), x.get());
          q.push_back(e);
        }
        out.max_residual = res;
      }
      std::vector<Poly> p;
      for (int i = 0; i <= r; ++i)
        p.emplace_back(std::vector<Rational>(q.begin() + i * (d + 1), q.begin() + (i + 1) * (d + 1)));
      if (p.front().is_zero() || p.back().is_zero()) continue;
      out.recurrence = Recurrence(std::move(p));
      return out;
    }
  out.max_residual = best_residual < 0 ? 0 : best_residual;
  return out;
}

}  // namespace holo
