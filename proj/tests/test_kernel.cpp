#include <random>

#include "doctest.h"
#include "holo/matrix.hpp"
#include "holo/poly.hpp"
#include "holo/series.hpp"

using namespace holo;

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9), den(1, 5);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), den(rng));
  return Poly(c);
}

}  // namespace

TEST_CASE("poly arithmetic") {
  const Poly n = Poly::x();
  CHECK((1 + n) * (1 - n) == Poly{1, 0, -1});
  const Poly p{3, -2, 7};
  CHECK((p + (-p)).is_zero());
  CHECK((n * n).shifted(1) == Poly{1, 2, 1});
  CHECK(Poly{1, 1}.shifted(Rational(1, 2)) == Poly{Rational(3, 2), 1});
}

TEST_CASE("poly products evaluate pointwise") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng, 6), b = random_poly(rng, 6);
    for (const Rational x : {Rational(0), Rational(1), Rational(-2), Rational(1, 3), Rational(-7, 5)}) {
      CHECK((a * b)(x) == a(x) * b(x));
      CHECK((a + b)(x) == a(x) + b(x));
      CHECK(a.compose(b)(x) == a(b(x)));
    }
  }
}

TEST_CASE("division and gcd") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = random_poly(rng, 5), b = random_poly(rng, 4), c = random_poly(rng, 3);
    if (b.is_zero() || c.is_zero()) continue;
    auto [q, r] = Poly::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const Poly g = gcd(a * c, b * c);
    CHECK(Poly::divmod(g, c.monic()).second.is_zero());
  }
  CHECK_THROWS_AS(Poly::divexact(Poly{1, 0, 1}, Poly{1, 1}), std::domain_error);
}

TEST_CASE("rational roots") {
  const Poly z = Poly::x();
  auto r = rational_roots(1 - z);
  REQUIRE(r.rational.size() == 1);
  CHECK(r.rational[0].value == 1);

  r = rational_roots(z * (1 - 4 * z));
  REQUIRE(r.rational.size() == 2);
  CHECK(r.rational[0].value == 0);
  CHECK(r.rational[1].value == Rational(1, 4));

  r = rational_roots(z * z + 1);
  CHECK(r.rational.empty());
  REQUIRE(r.nonrational.size() == 1);
  CHECK(r.nonrational[0].first.degree() == 2);

  r = rational_roots((z - Rational(2, 3)) * (z - Rational(2, 3)) * (z + 5) * (z * z - 2));
  REQUIRE(r.rational.size() == 2);
  CHECK(r.rational[0].value == -5);
  CHECK(r.rational[1].value == Rational(2, 3));
  CHECK(r.rational[1].multiplicity == 2);
  CHECK(r.nonrational.size() == 1);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = random_poly(rng, 4) * random_poly(rng, 1) * random_poly(rng, 1);
    if (p.is_zero() || p.is_constant()) continue;
    int total = 0;
    for (const auto& root : rational_roots(p).rational) {
      CHECK(p(root.value) == 0);
      total += root.multiplicity;
    }
    CHECK(total <= p.degree());
  }
}

TEST_CASE("nonnegative integer roots") {
  const Poly n = Poly::x();
  CHECK(nonnegative_integer_roots((n - 3) * (n + 1) * (2 * n - 1) * (n - 7)) == std::vector<long>{3, 7});
  CHECK(nonnegative_integer_roots(n + 1).empty());
}

TEST_CASE("nullspace over Q") {
  auto k = nullspace(Matrix<Rational>{{1, 1}, {2, 2}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{1, -1});

  CHECK(nullspace(Matrix<Rational>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).empty());

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Rational> m(4, 7);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        m(i, j) = Rational(coef(rng), 1 + (coef(rng) + 5) % 3);
        m(i, j).canonicalize();
      }
    const auto basis = nullspace(m);
    CHECK(basis.size() >= 3);
    for (const auto& v : basis)
      for (std::size_t i = 0; i < 4; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 7; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("nullspace over Q(n)") {
  const Poly n = Poly::x();
  Matrix<RatFun> m(1, 2);
  m(0, 0) = RatFun(n);
  m(0, 1) = RatFun(n * n);
  auto k = nullspace(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == n);
  CHECK(k[0][1] == Poly{-1});

  Matrix<RatFun> m2(2, 3);
  m2(0, 0) = RatFun(Poly{1}, n + 1);
  m2(0, 1) = RatFun(n);
  m2(0, 2) = RatFun(1);
  m2(1, 0) = RatFun(n * n);
  m2(1, 1) = RatFun(Poly{2});
  m2(1, 2) = RatFun(n - 3, n + 2);
  const auto basis = nullspace(m2);
  REQUIRE(basis.size() == 1);
  for (std::size_t i = 0; i < 2; ++i) {
    RatFun s;
    for (std::size_t j = 0; j < 3; ++j) s += m2(i, j) * RatFun(basis[0][j]);
    CHECK(s.is_zero());
  }
}

TEST_CASE("rank mod p") {
  CHECK(rank_mod_p(Matrix<Rational>{{1, 1}, {2, 2}}) == std::size_t{1});
  CHECK(rank_mod_p(Matrix<Rational>{{1, 2}, {3, Rational(1, 2)}}) == std::size_t{2});
}

TEST_CASE("series") {
  // exp(z) * exp(-z) = 1
  Series z(std::vector<Rational>{0, 1, 0, 0, 0, 0, 0, 0});
  Series e = z.exp(), f = (Rational(-1) * z).exp();
  Series prod = e * f;
  CHECK(prod[0] == 1);
  for (std::size_t k = 1; k < prod.length(); ++k) CHECK(prod[k] == 0);
  CHECK(e[3] == Rational(1, 6));
  // 1/(1-z) composed with z/(1+z) = (1+z)/(1+2z)... check against inverse
  Series one_minus_z(std::vector<Rational>{1, -1, 0, 0, 0, 0});
  Series geo = one_minus_z.inverse();
  for (std::size_t k = 0; k < 6; ++k) CHECK(geo[k] == 1);
  Series inner(std::vector<Rational>{0, 1, -1, 1, -1, 1});  // z/(1+z)
  Series comp = geo.compose(inner);                           // (1+z)
  CHECK(comp[0] == 1);
  CHECK(comp[1] == 1);
  for (std::size_t k = 2; k < 6; ++k) CHECK(comp[k] == 0);
}

TEST_CASE("rational parsing is decimal") {
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("-007/014") == Rational(-1, 2));
  CHECK(parse_rational(" 3/4 ") == Rational(3, 4));
  CHECK_THROWS(parse_rational("0x1f"));
  CHECK_THROWS(parse_rational("1/0"));
}
