#include "holo/matrix.hpp"

#include <algorithm>

namespace holo {

namespace {

struct IntegerRing {
  using Elem = Integer;
  static bool is_zero(const Elem& a) { return a == 0; }
  static Elem divexact(const Elem& a, const Elem& b) {
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  // Smaller pivots keep the fraction-free entries short.
  static std::size_t size(const Elem& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
};

struct PolyRing {
  using Elem = Poly;
  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static Elem divexact(const Elem& a, const Elem& b) { return Poly::divexact(a, b); }
  static std::size_t size(const Elem& a) { return static_cast<std::size_t>(a.degree()); }
};

// Fraction-free elimination to row echelon form followed by fraction-free
// back substitution, one kernel vector per non-pivot column.
template <class Ring>
std::vector<std::vector<typename Ring::Elem>> bareiss_kernel(
    std::vector<std::vector<typename Ring::Elem>> a, std::size_t cols) {
  using E = typename Ring::Elem;
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_cols;
  E prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (Ring::is_zero(a[i][c])) continue;
      if (best == rows || Ring::size(a[i][c]) < Ring::size(a[best][c])) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const E& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const E f = a[i][c];
      if (Ring::is_zero(f)) {
        for (std::size_t j = c + 1; j < cols; ++j)
          if (!Ring::is_zero(a[i][j])) a[i][j] = Ring::divexact(E(piv * a[i][j]), prev);
      } else {
        for (std::size_t j = c + 1; j < cols; ++j)
          a[i][j] = Ring::divexact(E(piv * a[i][j] - f * a[r][j]), prev);
        a[i][c] = E(0);
      }
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<E>> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<E> y(cols, E(0));
    y[free] = E(1);
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      if (pc > free) continue;  // those pivot variables stay zero
      E s(0);
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (!Ring::is_zero(y[j]) && !Ring::is_zero(a[k][j])) s = s + a[k][j] * y[j];
      if (Ring::is_zero(s)) continue;
      const E& piv = a[k][pc];
      for (auto& v : y)
        if (!Ring::is_zero(v)) v = v * piv;
      y[pc] = E(-s);
    }
    kernel.push_back(std::move(y));
  }
  return kernel;
}

Integer row_scale(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    const Integer l = row_scale(row);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational scaled = row[j] * l;
      a[i][j] = scaled.get_num();
    }
  }
  std::vector<std::vector<Rational>> out;
  for (auto& v : bareiss_kernel<IntegerRing>(std::move(a), m.cols())) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (first != v.end() && *first < 0) g = -g;
    std::vector<Rational> q(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) q[j] = Rational(Integer(v[j] / g));
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<std::vector<Poly>> nullspace(const Matrix<RatFun>& m) {
  std::vector<std::vector<Poly>> a(m.rows(), std::vector<Poly>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).denominator();
      if (d.degree() > 0) l = Poly::divexact(l * d, gcd(l, d));
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = Poly::divexact(m(i, j).numerator() * l, m(i, j).denominator());
  }
  std::vector<std::vector<Poly>> out;
  for (auto& v : bareiss_kernel<PolyRing>(std::move(a), m.cols())) {
    Poly g;
    for (const auto& x : v) g = gcd(g, x);
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& x : v) {
      if (x.is_zero()) continue;
      x = Poly::divexact(x, g);
      for (const auto& c : x.coefficients()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      }
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    auto first = std::find_if(v.begin(), v.end(), [](const Poly& x) { return !x.is_zero(); });
    if (first != v.end() && first->leading() < 0) scale = -scale;
    for (auto& x : v) x *= scale;
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::size_t> rank_mod_p(const Matrix<Rational>& m, std::uint64_t p) {
  using u128 = unsigned __int128;
  const Integer P(std::to_string(p));
  auto reduce = [&](const Integer& x) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
    return static_cast<std::uint64_t>(std::stoull(r.get_str()));
  };
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::uint64_t d = reduce(m(i, j).get_den());
      if (d == 0) return std::nullopt;
      a[i][j] = mulmod(reduce(m(i, j).get_num()), powmod(d, p - 2));
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    const std::uint64_t inv = powmod(a[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulmod(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + p - mulmod(f, a[rank][j])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace holo
