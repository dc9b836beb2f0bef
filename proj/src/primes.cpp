#include "holo/primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>

#include "holo/errors.hpp"
#include "holo/hpeval/hpeval.hpp"
#include "holo/parallel.hpp"

namespace holo::primes {

namespace {

std::atomic<std::uint64_t> g_cap{std::uint64_t{1} << 31};

void check_cap(std::uint64_t limit) {
  if (limit > g_cap.load())
    throw CapExceeded("sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(g_cap.load()));
}

std::vector<std::uint32_t> small_sieve(std::uint64_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

// Odd numbers lo + 2i, i < count; lo odd.
std::vector<std::uint32_t> sieve_segment(std::uint64_t lo, std::uint64_t count, const std::vector<std::uint32_t>& base) {
  std::vector<char> comp(count, 0);
  const std::uint64_t hi = lo + 2 * count;
  for (std::uint32_t p : base) {
    if (p == 2) continue;
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t j = start; j < hi; j += 2 * p) comp[(j - lo) / 2] = 1;
  }
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 0; i < count; ++i)
    if (!comp[i] && lo + 2 * i > 1) out.push_back(static_cast<std::uint32_t>(lo + 2 * i));
  return out;
}

}  // namespace

std::uint64_t sieve_cap() { return g_cap.load(); }
void set_sieve_cap(std::uint64_t cap) { g_cap.store(cap); }

std::vector<std::uint32_t> sieve(std::uint64_t limit) {
  check_cap(limit);
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  out.push_back(2);
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(limit))) + 1;
  const auto base = small_sieve(root);
  const std::uint64_t odd_count = (limit + 1) / 2;  // odd numbers 1, 3, ..., <= limit
  const std::uint64_t segments = (odd_count + kSegmentSize - 1) / kSegmentSize;
  std::vector<std::vector<std::uint32_t>> parts(segments);
  parallel_for(segments, [&](std::size_t s) {
    const std::uint64_t first = s * kSegmentSize;
    const std::uint64_t count = std::min(kSegmentSize, odd_count - first);
    parts[s] = sieve_segment(2 * first + 1, count, base);
  });
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

namespace {

std::mutex g_table_mutex;
std::shared_ptr<const std::vector<std::uint32_t>> g_table;
std::uint64_t g_table_limit = 0;

}  // namespace

std::shared_ptr<const std::vector<std::uint32_t>> table_covering(std::uint64_t limit) {
  check_cap(limit);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (!g_table || g_table_limit < limit) {
    std::uint64_t target = std::max<std::uint64_t>({limit, 2 * g_table_limit, 1 << 16});
    target = std::min(target, g_cap.load());
    g_table = std::make_shared<const std::vector<std::uint32_t>>(sieve(target));
    g_table_limit = target;
  }
  return g_table;
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) return 1;
  // p_n < n (log n + log log n) for n >= 6.
  const double ln = std::log(static_cast<double>(std::max<std::uint64_t>(n, 6)));
  const auto bound = static_cast<std::uint64_t>(static_cast<double>(std::max<std::uint64_t>(n, 6)) * (ln + std::log(ln))) + 16;
  const auto t = table_covering(bound);
  return (*t)[n - 1];
}

std::uint64_t prime_pi(std::uint64_t x) {
  const auto t = table_covering(x);
  return static_cast<std::uint64_t>(std::upper_bound(t->begin(), t->end(), x) - t->begin());
}

std::vector<std::uint32_t> prime_pi_table(std::uint64_t limit) {
  const auto t = table_covering(limit);
  std::vector<std::uint32_t> out(limit + 1, 0);
  std::size_t i = 0;
  std::uint32_t count = 0;
  for (std::uint64_t x = 0; x <= limit; ++x) {
    while (i < t->size() && (*t)[i] <= x) {
      ++count;
      ++i;
    }
    out[x] = count;
  }
  return out;
}

hp::BigReal li(const Rational& x, hp::Bits bits) {
  using hp::Real;
  if (x <= 2) return hp::BigReal::from(0L, bits);
  const hp::Bits w = bits + 32;
  const Real a = hp::log(hp::BigReal::from(Rational(2), w)).value();
  const Real b = hp::log(hp::BigReal::from(x, w)).value();
  auto f = [&](const Real& u) {
    Real e(w), r(w);
    mpfr_exp(e.get(), u.get(), MPFR_RNDN);
    mpfr_div(r.get(), e.get(), u.get(), MPFR_RNDN);
    return r;
  };
  Real h(w);
  mpfr_sub(h.get(), b.get(), a.get(), MPFR_RNDN);
  std::vector<Real> prev, row;
  {
    Real t(w), fa = f(a), fb = f(b);
    mpfr_add(t.get(), fa.get(), fb.get(), MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), h.get(), MPFR_RNDN);
    mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);
    prev.push_back(t);
  }
  Real diff(w);
  for (int level = 1; level <= 40; ++level) {
    // Trapezoid refinement: add midpoints of the previous grid.
    const unsigned long count = 1UL << (level - 1);
    Real step(w), sum(w), u(w);
    mpfr_div_2ui(step.get(), h.get(), static_cast<unsigned long>(level), MPFR_RNDN);
    mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
    for (unsigned long i = 0; i < count; ++i) {
      mpfr_mul_ui(u.get(), step.get(), 2 * i + 1, MPFR_RNDN);
      mpfr_add(u.get(), u.get(), a.get(), MPFR_RNDN);
      const Real fu = f(u);
      mpfr_add(sum.get(), sum.get(), fu.get(), MPFR_RNDN);
    }
    row.assign(1, Real(w));
    mpfr_mul(sum.get(), sum.get(), step.get(), MPFR_RNDN);
    mpfr_div_ui(row[0].get(), prev[0].get(), 2, MPFR_RNDN);
    mpfr_add(row[0].get(), row[0].get(), sum.get(), MPFR_RNDN);
    for (int m = 1; m <= level; ++m) {
      // R(l, m) = R(l, m-1) + (R(l, m-1) - R(l-1, m-1)) / (4^m - 1)
      Real t(w);
      mpfr_sub(t.get(), row[static_cast<std::size_t>(m - 1)].get(), prev[static_cast<std::size_t>(m - 1)].get(), MPFR_RNDN);
      Real den(w);
      mpfr_set_ui(den.get(), 1, MPFR_RNDN);
      mpfr_mul_2ui(den.get(), den.get(), static_cast<unsigned long>(2 * m), MPFR_RNDN);
      mpfr_sub_ui(den.get(), den.get(), 1, MPFR_RNDN);
      mpfr_div(t.get(), t.get(), den.get(), MPFR_RNDN);
      mpfr_add(t.get(), t.get(), row[static_cast<std::size_t>(m - 1)].get(), MPFR_RNDN);
      row.push_back(t);
    }
    mpfr_sub(diff.get(), row.back().get(), prev.back().get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    prev = row;
    if (level >= 4) {
      Real rel(w);
      mpfr_div(rel.get(), diff.get(), row.back().get(), MPFR_RNDN);
      if (mpfr_get_exp(rel.get()) < -static_cast<long>(bits) || mpfr_zero_p(diff.get())) break;
    }
  }
  Real bound(64);
  mpfr_mul_ui(bound.get(), diff.get(), 4, MPFR_RNDU);
  Real ulp(64);
  mpfr_set_ui(ulp.get(), 1, MPFR_RNDN);
  mpfr_mul_2si(ulp.get(), ulp.get(), mpfr_get_exp(prev.back().get()) - static_cast<long>(bits), MPFR_RNDU);
  mpfr_add(bound.get(), bound.get(), ulp.get(), MPFR_RNDU);
  return hp::BigReal(prev.back().rounded(bits), bound);
}

hp::BigReal li_offset(hp::Bits bits) {
  // Ei(u) = gamma + log u + sum_{k>=1} u^k / (k k!), u = log 2.
  const hp::Bits w = bits + 32;
  const hp::BigReal u = hp::log(hp::BigReal::from(Rational(2), w));
  hp::BigReal sum = hp::euler_gamma(w) + hp::log(u);
  hp::BigReal term = hp::BigReal::from(1L, w);
  for (long k = 1; k < 4 * static_cast<long>(bits); ++k) {
    term = term * u / hp::BigReal::from(k, w);
    const hp::BigReal add = term / hp::BigReal::from(k, w);
    sum = sum + add;
    if (add.value().is_zero() || mpfr_get_exp(add.value().get()) < -static_cast<long>(w)) {
      // Remaining terms are dominated by a geometric series of ratio < 1/2.
      return sum.widened(std::ldexp(1.0, -static_cast<int>(w) + 1));
    }
  }
  return sum;
}

hp::BigReal li_series(const Rational& x, long terms, hp::Bits bits) {
  const hp::BigReal L = hp::log(hp::BigReal::from(x, bits));
  hp::BigReal term = hp::BigReal::from(1L, bits);
  hp::BigReal sum = hp::BigReal::from(0L, bits);
  for (long k = 0;; ++k) {
    if (terms > 0 && k >= terms) break;
    const hp::BigReal next = term * hp::BigReal::from(k + 1, bits) / L;
    // Stop before the smallest term.
    if (terms <= 0 && next.to_double() >= term.to_double()) break;
    sum = sum + term;
    term = next;
  }
  const hp::BigReal scale = hp::BigReal::from(x, bits) / L;
  const hp::BigReal value = sum * scale;
  const hp::BigReal omitted = term * scale;
  return value.widened(std::fabs(omitted.to_double()));
}

double cipolla_residual(std::uint64_t n) {
  const long double nn = static_cast<long double>(n);
  const long double g = static_cast<long double>(nth_prime(n));
  return static_cast<double>(g / nn - std::log(nn) - std::log(std::log(nn)));
}

}  // namespace holo::primes
