#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "holo/hpeval/real.hpp"

namespace holo::primes {

/// Largest sieve limit accepted; CapExceeded beyond it.
std::uint64_t sieve_cap();
void set_sieve_cap(std::uint64_t cap);

inline constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 20;

/// All primes <= limit, ascending. Segmented, odd-only.
std::vector<std::uint32_t> sieve(std::uint64_t limit);

/// Shared table covering at least [0, limit]; grows on demand.
std::shared_ptr<const std::vector<std::uint32_t>> table_covering(std::uint64_t limit);

/// g_0 = 1, g_1 = 2, g_2 = 3, ...
std::uint64_t nth_prime(std::uint64_t n);
/// Standard indexing, p_1 = 2.
inline std::uint64_t nth_prime_standard(std::uint64_t n) { return nth_prime(n); }
/// #{p prime <= x}.
std::uint64_t prime_pi(std::uint64_t x);
/// Prefix counts pi(0..limit), for streaming pi(n).
std::vector<std::uint32_t> prime_pi_table(std::uint64_t limit);

/// Li(x) = int_2^x dt / log t by Romberg quadrature of e^u/u on [log 2, log x].
hp::BigReal li(const Rational& x, hp::Bits bits);
/// li(2) = Ei(log 2), the gap between Li and the principal-value li.
hp::BigReal li_offset(hp::Bits bits);
/// x/log x sum_{k<K} k!/(log x)^k. terms <= 0 stops before the smallest
/// term; the bound is the first omitted term.
hp::BigReal li_series(const Rational& x, long terms = 0, hp::Bits bits = 128);

/// g_n/n - log n - log log n.
double cipolla_residual(std::uint64_t n);

}  // namespace holo::primes
