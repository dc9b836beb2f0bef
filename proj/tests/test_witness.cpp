#include <cmath>

#include "doctest.h"
#include "holo/closure.hpp"
#include "holo/hpeval/hpeval.hpp"
#include "holo/witness.hpp"

using namespace holo;

TEST_CASE("log transform small values") {
  CHECK(witness::log_transform(1).to_double() == 0);
  CHECK(witness::log_transform(2).to_double() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // 3 f_1... : -3 log 1 + 3 log 2 - log 3
  CHECK(witness::log_transform(3).to_double() == doctest::Approx(3 * std::log(2.0) - std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("log transform agrees with the closure transform") {
  const auto logs = SequenceStream::real([](long k, hp::Bits bits) { return hp::log_term(k, bits); });
  const auto t = binomial_diff_seq(logs, 200, true, 64);
  for (long n : {5L, 50L, 120L, 199L}) {
    const double a = witness::log_transform(n).to_double();
    const double b = t.real_term(n, 64).to_double();
    CHECK(std::fabs(a - b) <= 1e-15);
  }
  // Exact prefix: the real path reproduces exact values.
  const auto sq = SequenceStream::pointwise([](long k) -> Rational { return Rational(k * k + 1, k + 2); });
  const auto exact = binomial_diff_seq(sq, 60, false);
  const auto real = SequenceStream::real([](long k, hp::Bits bits) { return hp::BigReal::from(Rational(k * k + 1, k + 2), bits); });
  const auto approx = binomial_diff_seq(real, 60, false, 80);
  for (long n = 0; n < 60; ++n)
    CHECK(std::fabs(approx.real_term(n, 80).to_double() - exact.exact_term(n).get_d()) <= 1e-20 + 1e-15 * std::fabs(exact.exact_term(n).get_d()));
}

TEST_CASE("log witness, short grid") {
  const auto rep = witness::log(400);
  CHECK(rep.samples.front().x == 2);
  CHECK(rep.samples.front().value == doctest::Approx(std::log(2.0)));
  CHECK(rep.verdicts.at("bounded").value);
  CHECK(rep.verdicts.at("spread").value);
  CHECK(rep.verdicts.at("forbidden_scale").value);
  const auto j = rep.to_json();
  for (const char* key : {"experiment", "params", "samples", "verdicts", "precision_bits", "runtime_ms"})
    CHECK(j.contains(key));
  CHECK(j["samples"][0].contains("deviation"));
  // Verdicts are recomputable from the samples.
  double lo = 1e9, hi = -1e9;
  for (const auto& s : rep.samples)
    if (s.x >= 100) {
      lo = std::min(lo, s.deviation);
      hi = std::max(hi, s.deviation);
    }
  CHECK(rep.verdicts.at("spread").value == (hi - lo <= 0.5));
}

TEST_CASE("reproducible") {
  const auto a = witness::log(150, {100, 120, 150}).to_json();
  const auto b = witness::log(150, {100, 120, 150}).to_json();
  CHECK(a["samples"] == b["samples"]);
  CHECK(a["verdicts"] == b["verdicts"]);
}

TEST_CASE("powers witness") {
  const auto half = witness::powers(Rational(1, 2), 800);
  CHECK(half.samples.front().x == 2);
  CHECK(half.samples.front().value == doctest::Approx(-2 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(half.verdicts.at("forbidden_scale").value);
  CHECK(half.verdicts.at("ratio_window_negated").value);
  const auto three = witness::powers(3);
  CHECK(three.verdicts.at("holonomic").value);
}

TEST_CASE("primes witness, small range") {
  const auto rep = witness::primes(20000);
  CHECK(rep.verdicts.at("bounded").value);
  CHECK(rep.verdicts.at("guess_not_found").value);
  CHECK(rep.verdicts.at("forbidden_scale").value);
}

TEST_CASE("children rounds and Bell data") {
  const auto c = witness::children_rounds(6);
  // exp(A), A = z^2 + z^3/2 + z^4/3 + z^5/4 + ...; A^2/2 contributes z^4/2 + z^5/2.
  CHECK(c[0] == 1);
  CHECK(c[1] == 0);
  CHECK(c[2] == 1);
  CHECK(c[3] == Rational(1, 2));
  CHECK(c[4] == Rational(1, 3) + Rational(1, 2));
  CHECK(c[5] == Rational(1, 4) + Rational(1, 2));
  const auto b = witness::bell_numbers(10);
  const std::vector<long> expect{1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(b[i] == expect[i]);
}

TEST_CASE("misc witness") {
  const auto rep = witness::misc(11);
  for (const auto& [name, v] : rep.verdicts) {
    INFO(name << ": " << v.detail);
    CHECK(v.value);
  }
}
