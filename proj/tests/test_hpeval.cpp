#include <cmath>

#include "doctest.h"
#include "holo/errors.hpp"
#include "holo/hpeval/hpeval.hpp"

using namespace holo;
using namespace holo::hp;

namespace {

Real mpfr_gamma_oracle(const Rational& x, Bits bits) {
  Real v = Real::from(x, bits + 64);
  mpfr_gamma(v.get(), v.get(), MPFR_RNDN);
  return v;
}

/// |a - b| <= a.error + 2^-(bits-2) |b| against an oracle value b.
bool close_to(const BigReal& a, const Real& b) {
  Real diff(a.precision() + 64);
  mpfr_sub(diff.get(), a.value().get(), b.get(), MPFR_RNDN);
  Real tol = add_up(a.error(), half_ulp(a.value()));
  mpfr_mul_2si(tol.get(), tol.get(), 1, MPFR_RNDU);
  return mpfr_cmpabs(diff.get(), tol.get()) <= 0;
}

bool stable_under_more_bits(const std::function<BigReal(Bits)>& f, Bits bits) {
  return f(bits).agrees_with(f(bits + 64));
}

}  // namespace

TEST_CASE("BigReal bounds cover the true value") {
  const Bits p = 80;
  const BigReal third = BigReal::from(Rational(1, 3), p);
  const BigReal x = (third * BigReal::from(3L, p) - BigReal::from(1L, p)) * BigReal::from(1L << 20, p);
  CHECK(mpfr_cmpabs(x.value().get(), x.error().get()) <= 0);
  CHECK(x.error_log2() < -50);

  BigReal sum = BigReal::from(0L, p);
  for (long k = 1; k <= 1000; ++k) sum = sum + BigReal::from(Rational(1, k), p);
  const Real exact = Real::from(harmonic(1000), 300);
  CHECK(close_to(sum, exact));
  CHECK(sum.error_log2() < -60);
}

TEST_CASE("gamma") {
  CHECK(gamma(Rational(1), 128).to_double() == doctest::Approx(1.0));
  const BigReal half = gamma(Rational(1, 2), 128);
  CHECK(half.to_double() == doctest::Approx(1.7724538509055160));
  CHECK(gamma(Rational(5), 128).to_double() == doctest::Approx(24.0));
  for (const Rational x : {Rational(1, 2), Rational(13, 10), Rational(27, 10), Rational(41, 10), Rational(-7, 3),
                           Rational(1, 1000), Rational(55)}) {
    CHECK(close_to(gamma(x, 200), mpfr_gamma_oracle(x, 200)));
    // Gamma(x+1) = x Gamma(x)
    const BigReal lhs = gamma(Rational(x + 1), 200);
    const BigReal rhs = BigReal::from(x, 200) * gamma(x, 200);
    CHECK(lhs.agrees_with(rhs));
    CHECK(stable_under_more_bits([&](Bits b) { return gamma(x, b); }, 128));
  }
  CHECK_THROWS_AS(gamma(Rational(0), 64), PoleAtNonpositiveInteger);
  CHECK_THROWS_AS(gamma(Rational(-3), 64), PoleAtNonpositiveInteger);
}

TEST_CASE("complex gamma") {
  // |Gamma(1 - i)|^2 = pi / sinh(pi)
  const BigComplex g = gamma(ComplexExponent{1, -1}, 128);
  const double expected = std::sqrt(M_PI / std::sinh(M_PI));
  CHECK(g.abs_double() == doctest::Approx(expected).epsilon(1e-14));
  // Gamma(i) Gamma(1 - i) = pi / sin(pi i): |.| = pi / sinh(pi)
  const BigComplex gi = gamma(ComplexExponent{0, 1}, 128);
  CHECK(gi.abs_double() * g.abs_double() == doctest::Approx(M_PI / std::sinh(M_PI)).epsilon(1e-14));
  // Real axis agrees with the real routine.
  const BigComplex r = gamma(ComplexExponent{Rational(7, 2), 0}, 128);
  CHECK(r.re.agrees_with(gamma(Rational(7, 2), 128)));
  // Gamma(z + 1) = z Gamma(z) for z = 3/2 + 2i.
  const BigComplex a = gamma(ComplexExponent{Rational(3, 2), 2}, 160);
  const BigComplex b = gamma(ComplexExponent{Rational(5, 2), 2}, 160);
  const double are = a.re.to_double(), aim = a.im.to_double();
  CHECK(b.re.to_double() == doctest::Approx(1.5 * are - 2 * aim).epsilon(1e-13));
  CHECK(b.im.to_double() == doctest::Approx(1.5 * aim + 2 * are).epsilon(1e-13));
}

TEST_CASE("lambert W") {
  const Bits p = 160;
  Real e(p);
  mpfr_set_ui(e.get(), 1, MPFR_RNDN);
  mpfr_exp(e.get(), e.get(), MPFR_RNDN);
  const BigReal w1 = lambert_w(BigReal(e, half_ulp(e)));
  CHECK(w1.to_double() == doctest::Approx(1.0));
  CHECK(w1.error_log2() < -150);

  for (long k = 1; k <= 8; ++k) {
    const Integer x = Integer(10) ^ 0;
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(k));
    const BigReal xb = BigReal::from(Rational(pow10), p);
    const BigReal w = lambert_w(xb);
    const BigReal resid = w * exp(w) - xb;
    CHECK(resid.value().to_double() / std::pow(10.0, static_cast<double>(k)) < std::ldexp(1.0, -(p - 2)));
    const double lx = std::log(std::pow(10.0, static_cast<double>(k)));
    CHECK(std::fabs(w.to_double() - lx + std::log(lx)) <= 1.0);
    CHECK(stable_under_more_bits([&](Bits b) { return lambert_w(BigReal::from(Rational(pow10), b)); }, p));
  }
  CHECK(lambert_w(BigReal::from(1000000L, 128)).to_double() == doctest::Approx(11.383358086140053));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK(2 * harmonic(2) == 3);
  for (long n : {2001L, 2500L, 10007L}) {
    const BigReal asym = harmonic_real(n, 200);
    CHECK(close_to(asym, Real::from(harmonic(n), 300)));
  }
}

TEST_CASE("alternating binomial sums") {
  const PointwiseReal logf = cached(log_term);
  CHECK(binomial_diff_eval(logf, 2, 60).to_double() == doctest::Approx(std::log(2.0)));

  const BigReal v100 = binomial_diff_eval(logf, 100, 60);
  const double ll = std::log(std::log(100.0));
  CHECK(v100.to_double() > ll + 0.3);
  CHECK(v100.to_double() < ll + 0.9);
  CHECK(v100.error_log2() <= -60);
  CHECK(stable_under_more_bits([&](Bits) { return binomial_diff_eval(logf, 100, 60); }, 0));
  CHECK(binomial_diff_eval(logf, 100, 60).agrees_with(binomial_diff_eval(logf, 100, 124)));

  // Rational input: compare with the exact alternating sum.
  const PointwiseReal recip = [](long k, Bits b) { return BigReal::from(Rational(1, k + 1), b); };
  Rational exact = 0;
  Integer c = 1;
  const long n = 60;
  for (long k = 0; k <= n; ++k) {
    Rational term(c, k + 1);
    term.canonicalize();
    exact += (k % 2) ? Rational(-term) : term;
    c *= n - k;
    c /= k + 1;
  }
  CHECK(close_to(binomial_diff_eval(recip, n, 80, true), Real::from(exact, 200)));
  // sum_k binom(n,k)(-1)^k / (k+1) = 1 / (n+1)
  CHECK(exact == Rational(1, n + 1));
}

TEST_CASE("power sums") {
  const BigComplex w2 = power_diff_eval({Rational(1, 2), 0}, 2, 60);
  CHECK(w2.re.to_double() == doctest::Approx(-2 + std::sqrt(2.0)));

  // Integer exponent 1: sum binom(n,k)(-1)^k k = 0 for n >= 2.
  CHECK(std::fabs(power_diff_eval({1, 0}, 7, 60).re.to_double()) < 1e-15);
  // Exponent -1 gives -H_n.
  CHECK(power_diff_eval({-1, 0}, 30, 80).re.to_double() == doctest::Approx(-harmonic(30).get_d()));

  // sqrt(k), n = 1000: magnitude of w_n sqrt(pi log n) in [0.65, 1.35]; the sign is negative.
  const BigComplex w = power_diff_eval({Rational(1, 2), 0}, 1000, 40);
  const double scaled = w.re.to_double() * std::sqrt(M_PI * std::log(1000.0));
  CHECK(scaled < 0);
  CHECK(std::fabs(scaled) >= 0.65);
  CHECK(std::fabs(scaled) <= 1.35);

  // alpha = i, n = 500: |w_n| |Gamma(1 - i)| in [0.3, 3].
  const BigComplex wi = power_diff_eval({0, 1}, 500, 40);
  const double g = gamma(ComplexExponent{1, -1}, 64).abs_double();
  CHECK(wi.abs_double() * g >= 0.3);
  CHECK(wi.abs_double() * g <= 3.0);
  CHECK(wi.re.agrees_with(power_diff_eval({0, 1}, 500, 104).re));
}

TEST_CASE("precision cap") {
  const Bits old = precision_cap();
  set_precision_cap(256);
  CHECK_THROWS_AS(binomial_diff_eval(cached(log_term), 1000, 40), PrecisionExhausted);
  set_precision_cap(old);
}
