#include "holo/closure.hpp"

#include <functional>

#include "holo/errors.hpp"
#include "holo/matrix.hpp"

namespace holo {

namespace {

using Vec = std::vector<RatFun>;

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Smallest K with W_0..W_K dependent over the coefficient field, where
/// W_{k+1} = advance(W_k). Returns polynomial coefficients c_0..c_K.
std::vector<Poly> find_relation(const Vec& w0, const std::function<Vec(const Vec&)>& advance, std::size_t max_k) {
  if (is_zero(w0)) return {Poly(1)};
  std::vector<Vec> ws{w0};
  for (std::size_t k = 1; k <= max_k; ++k) {
    ws.push_back(advance(ws.back()));
    Matrix<RatFun> m(w0.size(), ws.size());
    for (std::size_t i = 0; i < w0.size(); ++i)
      for (std::size_t j = 0; j < ws.size(); ++j) m(i, j) = ws[j][i];
    auto kernel = nullspace(m);
    if (!kernel.empty()) return kernel.front();
  }
  throw InvalidOperator("no relation within the order bound");
}

/// u_{n+1+i} written in the basis u_n..u_{n+r-1}.
struct ShiftTable {
  int r = 0;
  std::vector<Vec> rows;
  explicit ShiftTable(const Recurrence& rec) : r(rec.order()) {
    for (int i = 0; i < r; ++i) {
      Vec v(static_cast<std::size_t>(r), RatFun(0));
      if (i + 1 < r) {
        v[static_cast<std::size_t>(i + 1)] = RatFun(1);
      } else {
        // u_{n+r} = -sum_{i>=1} p_i(n)/p_0(n) u_{n+r-i}
        for (int j = 0; j < r; ++j) v[static_cast<std::size_t>(j)] = RatFun(-rec.p(r - j), rec.p(0));
      }
      rows.push_back(std::move(v));
    }
  }
};

Vec shift_coefficients(const Vec& c) {
  Vec out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.shifted(1));
  return out;
}

/// c -> representation of the next shift in the given table's basis.
Vec advance_single(const Vec& c, const ShiftTable& t) {
  const Vec cs = shift_coefficients(c);
  Vec out(static_cast<std::size_t>(t.r), RatFun(0));
  for (int i = 0; i < t.r; ++i) {
    if (cs[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < t.r; ++j) {
      const RatFun& s = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!s.is_zero()) out[static_cast<std::size_t>(j)] += cs[static_cast<std::size_t>(i)] * s;
    }
  }
  return out;
}

Vec unit(int r, int i) {
  Vec v(static_cast<std::size_t>(r), RatFun(0));
  if (r > 0) v[static_cast<std::size_t>(i)] = RatFun(1);
  return v;
}

/// Nonnegative n with p_0(n + j) = 0 for some 0 <= j <= K.
std::vector<long> blocked_indices(const Recurrence& rec, long K) {
  std::vector<long> out;
  for (long root : nonnegative_integer_roots(rec.p(0)))
    for (long j = 0; j <= K; ++j)
      if (root - j >= 0) out.push_back(root - j);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Relation c_0 w_n + ... + c_K w_{n+K} turned into a Recurrence valid at
/// every n >= 0, with initial terms from the supplied stream if any.
Recurrence finish(std::vector<Poly> c, const std::vector<const Recurrence*>& inputs,
                  const std::function<SequenceStream(long)>& terms) {
  const long K = static_cast<long>(c.size()) - 1;
  std::vector<long> bad;
  for (const Recurrence* r : inputs) {
    auto b = blocked_indices(*r, K);
    bad.insert(bad.end(), b.begin(), b.end());
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  Poly guard = 1;
  for (long m : bad) guard *= Poly{Rational(-m), Rational(1)};
  std::vector<Poly> p;
  for (long i = 0; i <= K; ++i) p.push_back(c[static_cast<std::size_t>(K - i)] * guard);
  Recurrence rec(std::move(p));
  if (!terms) return rec;
  long len = rec.order();
  for (long root : nonnegative_integer_roots(rec.p(0))) len = std::max(len, root + rec.order() + 1);
  const SequenceStream s = terms(len);
  return rec.with_initial_terms(s.exact_prefix(static_cast<std::size_t>(len)));
}

bool have_initial(const Recurrence& r) { return static_cast<int>(r.initial_terms().size()) >= r.order(); }

}  // namespace

Recurrence closure_sum(const Recurrence& a, const Recurrence& b) {
  const ShiftTable ta(a), tb(b);
  const int ra = ta.r, rb = tb.r;
  Vec w0 = unit(ra, 0);
  const Vec w0b = unit(rb, 0);
  w0.insert(w0.end(), w0b.begin(), w0b.end());
  auto advance = [&](const Vec& c) {
    Vec ca(c.begin(), c.begin() + ra), cb(c.begin() + ra, c.end());
    Vec out = advance_single(ca, ta);
    const Vec ob = advance_single(cb, tb);
    out.insert(out.end(), ob.begin(), ob.end());
    return out;
  };
  auto c = find_relation(w0, advance, static_cast<std::size_t>(ra + rb));
  std::function<SequenceStream(long)> terms;
  if (have_initial(a) && have_initial(b))
    terms = [&](long len) {
      const auto u = unroll(a, len), v = unroll(b, len);
      std::vector<Rational> w;
      for (long n = 0; n < len; ++n) w.push_back(u.exact_term(n) + v.exact_term(n));
      return SequenceStream::exact(std::move(w));
    };
  return finish(std::move(c), {&a, &b}, terms);
}

Recurrence closure_hadamard(const Recurrence& a, const Recurrence& b) {
  const ShiftTable ta(a), tb(b);
  const int ra = ta.r, rb = tb.r;
  const std::size_t dim = static_cast<std::size_t>(ra * rb);
  Vec w0(dim, RatFun(0));
  if (dim) w0[0] = RatFun(1);
  auto advance = [&](const Vec& c) {
    Vec out(dim, RatFun(0));
    for (int i = 0; i < ra; ++i)
      for (int j = 0; j < rb; ++j) {
        const RatFun& cij = c[static_cast<std::size_t>(i * rb + j)];
        if (cij.is_zero()) continue;
        const RatFun cs = cij.shifted(1);
        const Vec& si = ta.rows[static_cast<std::size_t>(i)];
        const Vec& sj = tb.rows[static_cast<std::size_t>(j)];
        for (int k = 0; k < ra; ++k) {
          if (si[static_cast<std::size_t>(k)].is_zero()) continue;
          const RatFun left = cs * si[static_cast<std::size_t>(k)];
          for (int l = 0; l < rb; ++l)
            if (!sj[static_cast<std::size_t>(l)].is_zero())
              out[static_cast<std::size_t>(k * rb + l)] += left * sj[static_cast<std::size_t>(l)];
        }
      }
    return out;
  };
  auto c = find_relation(w0, advance, dim);
  std::function<SequenceStream(long)> terms;
  if (have_initial(a) && have_initial(b))
    terms = [&](long len) {
      const auto u = unroll(a, len), v = unroll(b, len);
      std::vector<Rational> w;
      for (long n = 0; n < len; ++n) w.push_back(u.exact_term(n) * v.exact_term(n));
      return SequenceStream::exact(std::move(w));
    };
  return finish(std::move(c), {&a, &b}, terms);
}

Recurrence closure_shift(const Recurrence& a, long s) {
  if (s < 0) throw std::invalid_argument("negative shift");
  std::vector<Poly> p;
  for (const auto& c : a.coeffs()) p.push_back(c.shifted(Rational(s)));
  std::vector<Rational> init;
  if (have_initial(a)) {
    const auto u = unroll(a, s + a.order() + 1);
    Recurrence r(p);
    long len = r.order();
    for (long root : nonnegative_integer_roots(r.p(0))) len = std::max(len, root + r.order() + 1);
    for (long n = 0; n < len; ++n) init.push_back(u.exact_term(n + s));
  }
  return Recurrence(std::move(p), std::move(init));
}

Recurrence closure_difference(const Recurrence& a) {
  const ShiftTable ta(a);
  const int r = ta.r;
  // w_n = u_{n+1} - u_n
  Vec w0 = advance_single(unit(r, 0), ta);
  if (r > 0) w0[0] -= RatFun(1);
  auto c = find_relation(w0, [&](const Vec& v) { return advance_single(v, ta); }, static_cast<std::size_t>(r));
  std::function<SequenceStream(long)> terms;
  if (have_initial(a))
    terms = [&](long len) {
      const auto u = unroll(a, len + 1);
      std::vector<Rational> w;
      for (long n = 0; n < len; ++n) w.push_back(u.exact_term(n + 1) - u.exact_term(n));
      return SequenceStream::exact(std::move(w));
    };
  return finish(std::move(c), {&a}, terms);
}

namespace {

/// y^{(i+1)} written in the basis y, ..., y^{(e-1)} for i = 0..e-1.
struct DerivTable {
  int e = 0;
  std::vector<Vec> rows;
  explicit DerivTable(const DiffOp& op) : e(op.order()) {
    for (int i = 0; i < e; ++i) {
      Vec v(static_cast<std::size_t>(e), RatFun(0));
      if (i + 1 < e) {
        v[static_cast<std::size_t>(i + 1)] = RatFun(1);
      } else {
        // y^{(e)} = -sum_{k>=1} q_k/q_0 y^{(e-k)}
        for (int j = 0; j < e; ++j) v[static_cast<std::size_t>(j)] = RatFun(-op.q(static_cast<std::size_t>(e - j)), op.q(0));
      }
      rows.push_back(std::move(v));
    }
  }
};

Vec differentiate(const Vec& c, const DerivTable& t) {
  Vec out(static_cast<std::size_t>(t.e), RatFun(0));
  for (int i = 0; i < t.e; ++i) {
    const RatFun& ci = c[static_cast<std::size_t>(i)];
    if (ci.is_zero()) continue;
    out[static_cast<std::size_t>(i)] += ci.derivative();
    for (int j = 0; j < t.e; ++j) {
      const RatFun& s = t.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!s.is_zero()) out[static_cast<std::size_t>(j)] += ci * s;
    }
  }
  return out;
}

DiffOp ode_from_relation(const std::vector<Poly>& c) {
  return DiffOp(std::vector<Poly>(c.rbegin(), c.rend()));
}

}  // namespace

DiffOp closure_ode_sum(const DiffOp& a, const DiffOp& b) {
  const DerivTable ta(a), tb(b);
  Vec w0 = unit(ta.e, 0);
  const Vec w0b = unit(tb.e, 0);
  w0.insert(w0.end(), w0b.begin(), w0b.end());
  auto advance = [&](const Vec& c) {
    Vec ca(c.begin(), c.begin() + ta.e), cb(c.begin() + ta.e, c.end());
    Vec out = differentiate(ca, ta);
    const Vec ob = differentiate(cb, tb);
    out.insert(out.end(), ob.begin(), ob.end());
    return out;
  };
  return ode_from_relation(find_relation(w0, advance, static_cast<std::size_t>(ta.e + tb.e)));
}

DiffOp closure_ode_product(const DiffOp& a, const DiffOp& b) {
  const DerivTable ta(a), tb(b);
  const int ea = ta.e, eb = tb.e;
  const std::size_t dim = static_cast<std::size_t>(ea * eb);
  Vec w0(dim, RatFun(0));
  if (dim) w0[0] = RatFun(1);
  auto advance = [&](const Vec& c) {
    Vec out(dim, RatFun(0));
    for (int i = 0; i < ea; ++i)
      for (int j = 0; j < eb; ++j) {
        const RatFun& cij = c[static_cast<std::size_t>(i * eb + j)];
        if (cij.is_zero()) continue;
        out[static_cast<std::size_t>(i * eb + j)] += cij.derivative();
        // (y^{(i)})' z^{(j)} + y^{(i)} (z^{(j)})'
        for (int k = 0; k < ea; ++k) {
          const RatFun& s = ta.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          if (!s.is_zero()) out[static_cast<std::size_t>(k * eb + j)] += cij * s;
        }
        for (int l = 0; l < eb; ++l) {
          const RatFun& s = tb.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
          if (!s.is_zero()) out[static_cast<std::size_t>(i * eb + l)] += cij * s;
        }
      }
    return out;
  };
  return ode_from_relation(find_relation(w0, advance, dim));
}

DiffOp closure_ode_apply(const DiffOp& a, const OreDiff<Poly>& A) {
  const DerivTable ta(a);
  // Reduce A y to the basis y, ..., y^{(e-1)}.
  Vec w0(static_cast<std::size_t>(ta.e), RatFun(0));
  Vec power = unit(ta.e, 0);
  for (std::size_t i = 0; i < A.by_order().size(); ++i) {
    if (!A.by_order()[i].is_zero())
      for (int j = 0; j < ta.e; ++j)
        w0[static_cast<std::size_t>(j)] += RatFun(A.by_order()[i]) * power[static_cast<std::size_t>(j)];
    Vec next(static_cast<std::size_t>(ta.e), RatFun(0));
    for (int k = 0; k < ta.e; ++k) {
      const RatFun& ck = power[static_cast<std::size_t>(k)];
      if (ck.is_zero()) continue;
      for (int j = 0; j < ta.e; ++j) {
        const RatFun& s = ta.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (!s.is_zero()) next[static_cast<std::size_t>(j)] += ck * s;
      }
    }
    power = std::move(next);
  }
  return ode_from_relation(
      find_relation(w0, [&](const Vec& c) { return differentiate(c, ta); }, static_cast<std::size_t>(ta.e)));
}

Recurrence closure_cauchy(const Recurrence& a, const Recurrence& b) {
  const Recurrence r = ode_to_rec(closure_ode_product(rec_to_ode(a), rec_to_ode(b)));
  if (!have_initial(a) || !have_initial(b)) return r;
  long len = r.order();
  for (long root : nonnegative_integer_roots(r.p(0))) len = std::max(len, root + r.order() + 1);
  const auto u = unroll(a, len), v = unroll(b, len);
  std::vector<Rational> w;
  for (long n = 0; n < len; ++n) {
    Rational s = 0;
    for (long k = 0; k <= n; ++k) s += u.exact_term(k) * v.exact_term(n - k);
    w.push_back(s);
  }
  return r.with_initial_terms(std::move(w));
}

SequenceStream binomial_diff_seq(const SequenceStream& seq, long N, bool include_k0, long target_bits) {
  if (seq.mode() == SequenceMode::real) {
    const hp::PointwiseReal f = hp::cached([seq](long k, hp::Bits bits) { return seq.real_term(k, bits); });
    std::vector<hp::BigReal> out;
    for (long n = 0; n <= N; ++n) out.push_back(hp::binomial_diff_eval(f, n, target_bits, include_k0));
    return SequenceStream::real(std::move(out));
  }
  const std::vector<Rational> f = seq.exact_prefix(static_cast<std::size_t>(N + 1));
  std::vector<Rational> out;
  out.reserve(f.size());
  for (long n = 0; n <= N; ++n) {
    Rational s = 0;
    Integer c = 1;
    for (long k = 0; k <= n; ++k) {
      if (k > 0 || include_k0) {
        const Rational t = Rational(c) * f[static_cast<std::size_t>(k)];
        if (k % 2) s -= t;
        else s += t;
      }
      c *= n - k;
      c /= k + 1;
    }
    out.push_back(s);
  }
  return SequenceStream::exact(std::move(out));
}

DiffOp substitute_rational(const DiffOp& ode, const RatFun& rho) {
  const RatFun drho = rho.derivative();
  if (drho.is_zero()) throw DegenerateSubstitution("substitution with a constant function");
  // y^{(i)}(rho(w)) = ((1/rho') d/dw)^i Y(w)
  const OreDiff<RatFun> E(std::vector<RatFun>{RatFun(0), RatFun(1) / drho});
  OreDiff<RatFun> power = OreDiff<RatFun>::multiplication(RatFun(1));
  OreDiff<RatFun> out;
  for (int i = 0; i <= ode.order(); ++i) {
    const RatFun c = evaluate(ode.coefficient_of_derivative(i), rho);
    out = out + OreDiff<RatFun>::multiplication(c) * power;
    power = E * power;
  }
  return DiffOp::from_ore(out);
}

Recurrence binomial_transform_op(const Recurrence& rec) {
  const Poly w = Poly::x();
  const RatFun rho(-w, Poly{1, -1});
  const DiffOp sub = substitute_rational(rec_to_ode(rec), rho);
  const OreDiff<Poly> one_minus_w = OreDiff<Poly>::multiplication(Poly{1, -1});
  const Recurrence r = ode_to_rec(DiffOp::from_ore(sub.to_ore() * one_minus_w));
  if (!have_initial(rec)) return r;
  long len = r.order();
  for (long root : nonnegative_integer_roots(r.p(0))) len = std::max(len, root + r.order() + 1);
  const auto t = binomial_diff_seq(unroll(rec, len), len, true);
  return r.with_initial_terms(t.exact_prefix(static_cast<std::size_t>(len)));
}

}  // namespace holo
