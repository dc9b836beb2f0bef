#include <sstream>

#include "doctest.h"
#include "holo/annihilators.hpp"
#include "holo/errors.hpp"

using namespace holo;

namespace {

const Poly n = Poly::x();
const Poly z = Poly::x();

Rational catalan(long k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  Rational r(c, k + 1);
  r.canonicalize();
  return r;
}

Rational factorial_term(long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Recurrence catalan_rec() { return Recurrence({n + 2, -(4 * n + 2)}, {1}); }

Series series_of(const SequenceStream& s, std::size_t len) { return Series(s.exact_prefix(len)); }

void check_ode_annihilates(const DiffOp& ode, const SequenceStream& s, std::size_t len) {
  const Series r = apply_to_series(ode, series_of(s, len));
  for (std::size_t k = 0; k < r.length(); ++k) CHECK(r[k] == 0);
}

}  // namespace

TEST_CASE("normalization") {
  const Recurrence r({Rational(-1, 2) * (n + 2), (2 * n + 1)});
  CHECK(r.p(0) == n + 2);
  CHECK(r.p(1) == -(4 * n + 2));
  // Common factor n+1 has no nonnegative root and is cancelled; n-3 is kept.
  const Recurrence s({(n + 1) * (n - 3), -(n + 1)});
  CHECK(s.p(0) == n - 3);
  CHECK(s.p(1) == Poly{-1});
  const Recurrence t({(n - 3) * n, (n - 3) * 2});
  CHECK(t.p(0) == (n - 3) * n);
  CHECK_THROWS_AS(Recurrence({n, Poly()}), InvalidOperator);
  CHECK(Recurrence({Poly(), Poly(1), Poly(-1)}).order() == 1);
}

TEST_CASE("unroll") {
  const auto ones = unroll(Recurrence({1, -1}), {1}, 5).exact_prefix(6);
  CHECK(ones == std::vector<Rational>(6, 1));

  const auto cat = unroll(catalan_rec(), 4).exact_prefix(5);
  for (long k = 0; k < 5; ++k) CHECK(cat[static_cast<std::size_t>(k)] == catalan(k));

  try {
    unroll(Recurrence({n - 3, -1}), {1}, 5);
    FAIL("expected LeadingCoefficientZero");
  } catch (const LeadingCoefficientZero& e) {
    CHECK(e.index() == 3);
  }
  // A solution with f_3 = 0 may take any value at index 4.
  const auto past = unroll(Recurrence({n - 3, -1}), {0, 0, 0, 0, 7}, 6).exact_prefix(7);
  CHECK(past[5] == 7);
  CHECK_THROWS_AS(unroll(Recurrence({n - 3, -1}), {1, -Rational(1, 3), Rational(1, 6), -Rational(1, 6), 7}, 6),
                  InconsistentInitialTerms);
  CHECK(past[6] == Rational(7, 2));
  CHECK_THROWS_AS(unroll(Recurrence({1, -1}), {1, 2}, 4), InconsistentInitialTerms);
}

TEST_CASE("apply") {
  const auto ones = unroll(Recurrence({1, -1}), {1}, 20);
  for (const auto& r : apply(Recurrence({1, -1}), ones, 0, 20)) CHECK(r == 0);

  const auto cat = SequenceStream::pointwise(catalan);
  for (const auto& r : apply(catalan_rec(), cat, 0, 100)) CHECK(r == 0);

  const std::vector<Rational> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  const auto ps = SequenceStream::exact(primes);
  int nonzero = 0;
  for (const auto& r : apply(catalan_rec(), ps, 0, 10)) nonzero += r != 0;
  CHECK(nonzero == 10);
}

TEST_CASE("rec_to_ode") {
  CHECK(rec_to_ode(Recurrence({1, -1}, {1})) == DiffOp({1 - z, Poly(-1)}));

  const Recurrence fact({1, -(n + 1)}, {1});
  const DiffOp ode = rec_to_ode(fact);
  CHECK(ode.order() == 2);
  check_ode_annihilates(ode, SequenceStream::pointwise(factorial_term), 50);

  CHECK(rec_to_ode(Recurrence({n + 1})) == DiffOp({Poly(1)}));
  // (n-2) f_n = 0 admits f = z^2; theta - 2 annihilates it.
  const DiffOp deg0 = rec_to_ode(Recurrence({n - 2}));
  check_ode_annihilates(deg0, SequenceStream::exact(std::vector<Rational>{0, 0, 5, 0, 0, 0}), 6);

  const DiffOp cat = rec_to_ode(catalan_rec());
  check_ode_annihilates(cat, unroll(catalan_rec(), 60), 60);
  // Without initial terms the operator must annihilate every solution.
  const DiffOp cat_all = rec_to_ode(Recurrence({n + 2, -(4 * n + 2)}));
  check_ode_annihilates(cat_all, unroll(catalan_rec(), {3}, 40), 40);
}

TEST_CASE("ode_to_rec") {
  CHECK(ode_to_rec(DiffOp({1, -1})) == Recurrence({n + 1, -1}));
  CHECK(ode_to_rec(DiffOp({1 - z, Poly(-1)})) == Recurrence({1, -1}));

  const Recurrence back = ode_to_rec(rec_to_ode(catalan_rec()));
  const auto cat = unroll(catalan_rec(), 120);
  for (const auto& r : apply(back, cat, 0, 100)) CHECK(r == 0);
}

TEST_CASE("round trip on assorted recurrences") {
  const std::vector<Recurrence> recs{
      Recurrence({1, -1, -1}, {0, 1}),                                  // Fibonacci
      Recurrence({n + 3, -(2 * n + 3), -3 * n}, {1, 1}),                // Motzkin
      Recurrence({n + 1, -(4 * n + 2)}, {1}),                           // central binomial
      Recurrence({1, -(n + 1)}, {1}),                                   // factorial_term
      Recurrence({n * n + 1, Poly(2), -(n + 5)}, {Rational(1, 2), 3}),  // arbitrary
  };
  for (const auto& r : recs) {
    const auto s = unroll(r, 130);
    check_ode_annihilates(rec_to_ode(r), s, 80);
    const Recurrence back = ode_to_rec(rec_to_ode(r));
    for (const auto& res : apply(back, s, 0, 100)) CHECK(res == 0);
  }
}

TEST_CASE("singular points") {
  auto s = singular_points(DiffOp({1 - z, Poly(-1)}));
  REQUIRE(s.rational.size() == 1);
  CHECK(s.rational[0].value == 1);
  CHECK(singular_points(DiffOp({1, -1})).rational.empty());
  s = singular_points(DiffOp({z * (1 - 4 * z), Poly(1), Poly(2)}));
  REQUIRE(s.rational.size() == 2);
  CHECK(s.rational[0].value == 0);
  CHECK(s.rational[1].value == Rational(1, 4));
  const DiffOp op({z * z * (z * z + 1) * (z - 3), Poly(1)});
  s = singular_points(op);
  CHECK(s.rational.size() == 2);
  CHECK(s.nonrational.size() == 1);
  CHECK(static_cast<int>(s.rational.size()) <= op.q(0).degree());
}

TEST_CASE("b-file") {
  std::istringstream ok("# header\n1 2\n2 3\n\n3 5   # third\n");
  long offset = -1;
  const auto v = read_bfile(ok, &offset);
  CHECK(offset == 1);
  CHECK(v == std::vector<Integer>{2, 3, 5});
  std::istringstream gap("0 1\n1 1\n3 2\n");
  CHECK_THROWS_AS(read_bfile(gap), MalformedInput);
  std::istringstream junk("0 1\n1 x\n");
  CHECK_THROWS_AS(read_bfile(junk), MalformedInput);
}
