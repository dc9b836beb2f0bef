#include <random>

#include "closure_fixtures.hpp"
#include "doctest.h"
#include "holo/closure.hpp"
#include "holo/errors.hpp"

using namespace holo;

namespace {

const Poly n = Poly::x();

Rational binom(long a, long b) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return Rational(c);
}

void check_annihilates(const Recurrence& r, const std::function<Rational(long)>& f, long count) {
  const auto s = SequenceStream::pointwise(f);
  long bad = 0;
  for (const auto& x : apply(r, s, 0, count)) bad += x != 0;
  CHECK(bad == 0);
}

const Recurrence ones({1, -1}, {1});
const Recurrence twos({1, -2}, {1});
const Recurrence fib({1, -1, -1}, {0, 1});
const Recurrence catalan({n + 2, -(4 * n + 2)}, {1});
const Recurrence central({n + 1, -(4 * n + 2)}, {1});
const Recurrence fact({1, -(n + 1)}, {1});
const Recurrence inv_fact({n + 1, -1}, {1});

}  // namespace

TEST_CASE("closure_sum") {
  const Recurrence s = closure_sum(ones, twos);
  CHECK(s.order() <= 2);
  check_annihilates(s, [](long k) -> Rational { return Rational(1) + Rational(Integer(1) << static_cast<unsigned long>(k)); }, 200);
  const auto u = unroll(s, 10).exact_prefix(11);
  CHECK(u[10] == 1025);

  const Recurrence d = closure_sum(ones, ones);
  CHECK(d.order() <= 2);
  check_annihilates(d, [](long) -> Rational { return Rational(2); }, 200);

  const Recurrence fc = closure_sum(fib, catalan);
  CHECK(fc.order() <= 3);
  const auto fs = unroll(fib, 210), cs = unroll(catalan, 210);
  check_annihilates(fc, [&](long k) -> Rational { return fs.exact_term(k) + cs.exact_term(k); }, 200);
  const auto fcs = unroll(fc, 200);
  for (long k = 0; k <= 200; k += 37) CHECK(fcs.exact_term(k) == fs.exact_term(k) + cs.exact_term(k));
}

TEST_CASE("closure_hadamard") {
  const Recurrence sq = closure_hadamard(central, central);
  CHECK(sq.order() == 1);
  check_annihilates(sq, [](long k) -> Rational { return binom(2 * k, k) * binom(2 * k, k); }, 100);

  const Recurrence fo = closure_hadamard(fib, ones);
  CHECK(fo.order() <= 2);
  const auto fs = unroll(fib, 220);
  check_annihilates(fo, [&](long k) -> Rational { return fs.exact_term(k); }, 200);

  const Recurrence tele = closure_hadamard(fact, inv_fact);
  check_annihilates(tele, [](long) -> Rational { return Rational(1); }, 100);
  CHECK(unroll(tele, 5).exact_prefix(6) == std::vector<Rational>(6, 1));
}

TEST_CASE("random closure certificates") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 12; ++trial) {
    const Recurrence a = fixtures::random_recurrence(rng, 2), b = fixtures::random_recurrence(rng, 2);
    const auto u = unroll(a, 230), v = unroll(b, 230);
    const Recurrence s = closure_sum(a, b);
    CHECK(s.order() <= a.order() + b.order());
    check_annihilates(s, [&](long k) -> Rational { return u.exact_term(k) + v.exact_term(k); }, 200);
    const Recurrence h = closure_hadamard(a, b);
    CHECK(h.order() <= a.order() * b.order());
    check_annihilates(h, [&](long k) -> Rational { return u.exact_term(k) * v.exact_term(k); }, 200);
  }
}

TEST_CASE("blocked leading coefficients are guarded") {
  // (n-2) u_{n+1} = u_n has solutions supported from n = 3 on.
  const Recurrence a({n - 2, -1}, {0, 0, 0, 5});
  const Recurrence s = closure_sum(a, ones);
  const auto u = unroll(a, 40);
  check_annihilates(s, [&](long k) -> Rational { return u.exact_term(k) + 1; }, 35);
  const auto w = unroll(s, 30);
  for (long k = 0; k <= 30; ++k) CHECK(w.exact_term(k) == u.exact_term(k) + 1);
}

TEST_CASE("shift and difference") {
  const auto cs = unroll(catalan, 60);
  const Recurrence sh = closure_shift(catalan, 3);
  check_annihilates(sh, [&](long k) -> Rational { return cs.exact_term(k + 3); }, 50);
  CHECK(unroll(sh, 2).exact_prefix(3) == std::vector<Rational>{5, 14, 42});
  const Recurrence df = closure_difference(catalan);
  check_annihilates(df, [&](long k) -> Rational { return cs.exact_term(k + 1) - cs.exact_term(k); }, 50);
  CHECK(df.order() <= 1);
}

TEST_CASE("ODE closures") {
  const Poly z = Poly::x();
  const DiffOp geo({1 - z, Poly(-1)});        // 1/(1-z)
  const DiffOp lg({1 - z, Poly(-1), Poly()});  // log(1/(1-z)) and constants
  // H(z) = log(1/(1-z)) / (1-z), l(z) = z H'(z) has coefficients n H_n.
  const DiffOp H = closure_ode_product(geo, lg);
  const DiffOp ell = closure_ode_apply(H, OreDiff<Poly>(std::vector<Poly>{Poly(), z}));
  std::vector<Rational> coeffs;
  Rational h = 0;
  for (long k = 0; k < 60; ++k) {
    if (k > 0) h += Rational(1, k);
    h.canonicalize();
    coeffs.push_back(Rational(k) * h);
  }
  const Series r = apply_to_series(ell, Series(coeffs));
  for (std::size_t k = 0; k < r.length(); ++k) CHECK(r[k] == 0);
  const Recurrence rec = ode_to_rec(ell);
  check_annihilates(rec, [&](long k) -> Rational { return coeffs[static_cast<std::size_t>(k)]; }, 50);

  const DiffOp ex({1, -1});  // e^z
  const DiffOp sum = closure_ode_sum(ex, geo);
  std::vector<Rational> c2;
  Integer f = 1;
  for (long k = 0; k < 40; ++k) {
    if (k > 0) f *= k;
    Rational t(1, f);
    t.canonicalize();
    c2.push_back(1 + t);
  }
  const Series r2 = apply_to_series(sum, Series(c2));
  for (std::size_t k = 0; k < r2.length(); ++k) CHECK(r2[k] == 0);

  const Recurrence cauchy = closure_cauchy(ones, ones);  // n + 1
  check_annihilates(cauchy, [](long k) -> Rational { return Rational(k + 1); }, 60);
}

TEST_CASE("binomial_diff_seq") {
  const auto t1 = binomial_diff_seq(SequenceStream::pointwise([](long) -> Rational { return Rational(1); }), 8);
  CHECK(t1.exact_prefix(9) == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto t2 = binomial_diff_seq(SequenceStream::pointwise([](long k) -> Rational { return Rational(k); }), 8);
  CHECK(t2.exact_prefix(9) == std::vector<Rational>{0, -1, 0, 0, 0, 0, 0, 0, 0});
  const auto lg = SequenceStream::real([](long k, hp::Bits b) { return hp::log_term(k, b); });
  const auto t3 = binomial_diff_seq(lg, 2, false, 60);
  CHECK(t3.real_term(2, 64).to_double() == doctest::Approx(0.6931471805599453));

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> v;
    for (int k = 0; k < 60; ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      v.push_back(q);
    }
    const auto once = binomial_diff_seq(SequenceStream::exact(v), 59);
    const auto twice = binomial_diff_seq(once, 59);
    CHECK(twice.exact_prefix(60) == v);
  }
}

TEST_CASE("generating-function form of the transform") {
  // (1/(1-z)) f(-z/(1-z)) against the direct sums, N = 40.
  const std::size_t N = 40;
  Series inner(N), geo(N);
  for (std::size_t k = 0; k < N; ++k) {
    geo[k] = 1;
    if (k) inner[k] = -1;
  }
  for (const Recurrence& r : {fib, catalan, fact, central}) {
    const auto f = unroll(r, static_cast<long>(N));
    const Series F(f.exact_prefix(N));
    const Series lhs = geo * F.compose(inner);
    const auto rhs = binomial_diff_seq(f, static_cast<long>(N) - 1).exact_prefix(N);
    for (std::size_t k = 0; k < N; ++k) CHECK(lhs[k] == rhs[k]);
  }
}

TEST_CASE("substitute_rational") {
  const Poly w = Poly::x();
  const DiffOp geo({1 - w, Poly(-1)});
  const RatFun rho(-w, Poly{1, -1});
  const DiffOp sub = substitute_rational(geo, rho);
  // 1/(1 - rho(w)) = 1 - w
  const Series r = apply_to_series(sub, Series(std::vector<Rational>{1, -1, 0, 0, 0, 0, 0, 0}));
  for (std::size_t k = 0; k < r.length(); ++k) CHECK(r[k] == 0);

  CHECK(substitute_rational(geo, RatFun(w)) == geo);
  const DiffOp flat({1, 0});  // y' = 0
  const DiffOp flat_sub = substitute_rational(flat, RatFun(w * w + 1, w - 3));
  CHECK(flat_sub.order() == 1);
  CHECK(flat_sub.q(1).is_zero());
  CHECK_THROWS_AS(substitute_rational(geo, RatFun(Rational(3))), DegenerateSubstitution);

  // Catalan GF under w -> w/(1+w), series composition check to order 50.
  const DiffOp cat = rec_to_ode(catalan);
  const RatFun rho2(w, Poly{1, 1});
  const DiffOp cat_sub = substitute_rational(cat, rho2);
  const std::size_t N = 50;
  Series inner(N);
  for (std::size_t k = 1; k < N; ++k) inner[k] = (k % 2) ? 1 : -1;
  const Series composed = Series(unroll(catalan, N).exact_prefix(N)).compose(inner);
  const Series res = apply_to_series(cat_sub, composed);
  for (std::size_t k = 0; k < res.length(); ++k) CHECK(res[k] == 0);
}

TEST_CASE("binomial_transform_op") {
  const Recurrence t1 = binomial_transform_op(ones);
  const auto s1 = unroll(t1, 20).exact_prefix(21);
  CHECK(s1[0] == 1);
  for (std::size_t k = 1; k < s1.size(); ++k) CHECK(s1[k] == 0);

  const Recurrence lin({n, -(n + 1)}, {0, 1});  // f_n = n
  const auto s2 = unroll(binomial_transform_op(lin), 20).exact_prefix(21);
  CHECK(s2[0] == 0);
  CHECK(s2[1] == -1);
  for (std::size_t k = 2; k < s2.size(); ++k) CHECK(s2[k] == 0);

  for (const Recurrence& r : {fib, catalan, central, fact}) {
    const Recurrence t = binomial_transform_op(r);
    const auto direct = binomial_diff_seq(unroll(r, 110), 110);
    long bad = 0;
    for (const auto& x : apply(t, direct, 0, 100)) bad += x != 0;
    CHECK(bad == 0);
  }
}
