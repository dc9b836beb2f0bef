#include <cmath>

#include "doctest.h"
#include "holo/abelian.hpp"
#include "holo/errors.hpp"
#include "holo/primes.hpp"

using namespace holo;

namespace {

const long double kPi = 3.14159265358979323846264338327950288L;

}  // namespace

TEST_CASE("transfer descriptors") {
  CHECK(transfer({0, 0, 1}).to_string() == "log(log(1/(1-z)))/(1-z)");
  CHECK(transfer({1, -1, 0}).to_string() == "1/((1-z)^2*log(1/(1-z)))");
  CHECK(transfer({0, 0, 0}).to_string() == "1/(1-z)");
  CHECK(transfer({Rational(1, 2), 0, 0}).to_string() == "Gamma(3/2)/(1-z)^(3/2)");
  CHECK(transfer({2, 0, 0}).to_string() == "Gamma(3)/(1-z)^3");
  CHECK_THROWS_AS(transfer({-1, 0, 0}), AlphaNegative);
  const auto e = transfer({Rational(1, 2), 0, 0});
  CHECK(e.gamma_factor.to_double() == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-15));
  CHECK(e.pole_order == Rational(3, 2));
}

TEST_CASE("element evaluation") {
  const auto e = transfer({1, -1, 0});
  const Complex z(0.9L, 0.05L);
  const Complex x = 1.0L / (1.0L - z);
  const Complex expect = x * x / std::log(x);
  CHECK(std::abs(e(z) - expect) <= 1e-15L * std::abs(expect));
}

TEST_CASE("exact cases") {
  for (long double theta : {0.0L, kPi / 4, -kPi / 4}) {
    const auto one = verify_transfer([](long) { return 1.0L; }, {0, 0, 0}, theta, 12);
    for (const auto& s : one.samples)
      CHECK(std::fabs(s.ratio - 1) <= s.tail_estimate + s.rounding_estimate);
    const auto lin = verify_transfer([](long n) { return static_cast<long double>(n + 1); }, {1, 0, 0}, theta, 12);
    for (const auto& s : lin.samples)
      CHECK(std::fabs(s.ratio - 1) <= s.tail_estimate + s.rounding_estimate);
  }
}

TEST_CASE("tail estimates are small at theta = 0") {
  const auto rep = verify_transfer([](long) { return 1.0L; }, {0, 0, 0}, 0, 10);
  for (const auto& s : rep.samples) CHECK(s.tail_estimate < 1e-6L);
  CHECK(transfer_truncation(4) == 256);
  CHECK(transfer_truncation(14) == 16384L * 196);
}

TEST_CASE("sector symmetry") {
  auto u = [](long n) { return std::sqrt(static_cast<long double>(n)); };
  const auto a = verify_transfer(u, {Rational(1, 2), 0, 0}, kPi / 6, 9);
  const auto b = verify_transfer(u, {Rational(1, 2), 0, 0}, -kPi / 6, 9);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const auto& s = a.samples[i];
    const auto& t = b.samples[i];
    CHECK(std::abs(s.partial_sum - std::conj(t.partial_sum)) <= 1e-12L * std::abs(s.partial_sum));
    CHECK(std::fabs(s.ratio - t.ratio) <= 2 * (s.rounding_estimate + 1e-15L));
  }
}

TEST_CASE("gamma normalization for powers") {
  for (const Rational alpha : {Rational(1, 2), Rational(1), Rational(2)}) {
    const double a = alpha.get_d();
    const auto rep = verify_transfer([a](long n) { return std::pow(static_cast<long double>(n), static_cast<long double>(a)); },
                                     {alpha, 0, 0}, 0, 14);
    CHECK(std::fabs(rep.samples.back().ratio - 1) <= 0.2L);
  }
}

TEST_CASE("prime counting function") {
  const long N = transfer_truncation(14) + 1;
  const auto pi = primes::prime_pi_table(static_cast<std::uint64_t>(N));
  auto u = [&pi](long n) { return static_cast<long double>(pi[static_cast<std::size_t>(n)]); };
  for (long double theta : {0.0L, kPi / 4}) {
    const auto rep = verify_transfer(u, {1, -1, 0}, theta, 14);
    const auto& last = rep.samples.back();
    CHECK(last.k == 14);
    CHECK(last.ratio >= 0.7L);
    CHECK(last.ratio <= 1.3L);
    CHECK(rep.trend_toward_one);
  }
}
