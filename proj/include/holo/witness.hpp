#pragma once

#include <map>
#include <string>
#include <vector>

#include "holo/json_io.hpp"

namespace holo::witness {

struct Sample {
  double x;
  double value;
  double reference;
  double deviation;
};

struct Verdict {
  bool value = false;
  /// The window or condition tested, in words.
  std::string threshold;
  /// "exact", "calibrated" (numeric window for an O(1) statement) or "search".
  std::string basis;
  std::string detail;
};

struct Report {
  std::string experiment;
  Json params = Json::object();
  std::vector<Sample> samples;
  std::map<std::string, Verdict> verdicts;
  long precision_bits = 0;
  double runtime_ms = 0;
  std::string disclaimer;
  Json extra = Json::object();

  bool all_verdicts() const;
  Json to_json() const;
};

/// f^_n = sum_{k=1}^n binom(n,k) (-1)^k log k, accurate to 2^-target_bits.
hp::BigReal log_transform(long n, long target_bits = 64);

/// d_n = f^_n - log log n on the grid (default: every n in [2, nmax]).
/// Verdicts over n in [100, nmax]: all d_n in (0, 2), spread <= 0.5, and
/// the scale (-1, 0, 1) rejected by the singular-point check.
Report log(long nmax = 2000, std::vector<long> grid = {}, long target_bits = 64);

/// Non-integral alpha: rho_n = w_n Gamma(1-alpha) (log n)^alpha, verdict
/// |rho_n - 1| <= 0.35 on [500, nmax]. Integral alpha: exact guessing on
/// 100 terms of n^alpha.
Report powers(const Rational& alpha, long nmax = 5000, std::vector<long> grid = {});

/// e_n = (g_n - n H_n)/n - log log n on a log grid in [100, nmax],
/// verdict |e_n| <= 2; guessing on 300 primes at (4, 4) expected to fail.
Report primes(long nmax = 1000000);

/// Lambert W bootstrap, children-rounds and Bell negatives, positive
/// specimens binom(2n,n)^k, and the transfer check for pi(n).
Report misc(int transfer_depth = 14);

/// Coefficients of (1-z)^{-z} = exp(sum_{k>=1} z^{k+1}/k).
std::vector<Rational> children_rounds(std::size_t count);
/// B_0..B_{count-1} by B_{n+1} = sum_k binom(n,k) B_k.
std::vector<Rational> bell_numbers(std::size_t count);
/// Log-spaced integers from lo to hi inclusive with the given ratio.
std::vector<long> log_grid(long lo, long hi, double ratio);

}  // namespace holo::witness
