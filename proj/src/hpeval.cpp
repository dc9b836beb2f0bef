#include "holo/hpeval/hpeval.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "holo/errors.hpp"

namespace holo::hp {

namespace {

BigReal zero(Bits bits) { return BigReal(bits); }

BigReal from_integer(const Integer& z, Bits bits) {
  Real v = Real::from(z, bits);
  Real e = half_ulp(v);
  return {std::move(v), std::move(e)};
}

/// log2 |q| for q != 0; size decisions only.
double log2_abs(const Rational& q) {
  Real r = Real::from(q, 64);
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, r.get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

/// 2^x as a BigReal error contribution.
Real pow2(double x) {
  Real r(kErrorBits);
  mpfr_set_d(r.get(), x, MPFR_RNDU);
  mpfr_exp2(r.get(), r.get(), MPFR_RNDU);
  return r;
}

}  // namespace

PointwiseReal cached(PointwiseReal f) {
  struct Memo {
    std::mutex mutex;
    std::map<long, BigReal> values;
  };
  auto memo = std::make_shared<Memo>();
  return [f = std::move(f), memo](long k, Bits bits) -> BigReal {
    {
      std::lock_guard<std::mutex> lock(memo->mutex);
      auto it = memo->values.find(k);
      if (it != memo->values.end() && it->second.precision() >= bits) {
        if (it->second.precision() == bits) return it->second;
        Real v = it->second.value().rounded(bits);
        Real e = add_up(it->second.error(), half_ulp(v));
        return {std::move(v), std::move(e)};
      }
    }
    BigReal v = f(k, bits);
    std::lock_guard<std::mutex> lock(memo->mutex);
    auto it = memo->values.find(k);
    if (it == memo->values.end() || it->second.precision() < bits) memo->values.insert_or_assign(k, v);
    return v;
  };
}

BigReal log_term(long k, Bits bits) {
  if (k <= 1) return zero(bits);
  Real v(bits);
  mpfr_log_ui(v.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  Real e = half_ulp(v);
  return {std::move(v), std::move(e)};
}

Bits binomial_sum_precision(long n, long target_bits) {
  const long lg = static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 2.0)));
  return std::max<Bits>(n + target_bits + 2 * lg, 64);
}

namespace {

template <class Attempt>
auto with_rising_precision(long n, long target_bits, Attempt attempt) {
  Bits p = binomial_sum_precision(n, target_bits);
  const Bits cap = precision_cap();
  for (;;) {
    if (p > cap) {
      if (p - cap > std::max<Bits>(64, p / 3))
        throw PrecisionExhausted("need more than " + std::to_string(cap) + " bits for n = " + std::to_string(n));
      p = cap;
    }
    auto result = attempt(p);
    if (result.second) return std::move(result.first);
    if (p == cap)
      throw PrecisionExhausted("target 2^-" + std::to_string(target_bits) + " not met at the cap of " +
                               std::to_string(cap) + " bits");
    p += std::max<Bits>(64, p / 2);
  }
}

}  // namespace

BigReal binomial_diff_eval(const PointwiseReal& f, long n, long target_bits, bool include_k0) {
  if (n < 0) throw std::invalid_argument("negative index");
  return with_rising_precision(n, target_bits, [&](Bits p) {
    BigReal sum = zero(p);
    Integer c = 1;
    for (long k = 0; k <= n; ++k) {
      if (k > 0 || include_k0) {
        const BigReal term = from_integer(c, p) * f(k, p);
        sum = (k % 2) ? sum - term : sum + term;
      }
      c *= n - k;
      c /= k + 1;
    }
    const bool ok = sum.error_log2() <= -target_bits;
    return std::make_pair(std::move(sum), ok);
  });
}

BigComplex power_diff_eval(const ComplexExponent& alpha, long n, long target_bits) {
  if (n < 0) throw std::invalid_argument("negative index");
  const bool real_only = alpha.im == 0;
  return with_rising_precision(n, target_bits, [&](Bits p) {
    const BigReal a = BigReal::from(alpha.re, p), b = BigReal::from(alpha.im, p);
    BigComplex sum{zero(p), zero(p)};
    Integer c = n;
    for (long k = 1; k <= n; ++k) {
      const BigReal L = log_term(k, p);
      const BigReal mag = exp(a * L);
      const BigReal coef = from_integer(c, p);
      BigReal re = coef * (real_only ? mag : mag * cos(b * L));
      if (k % 2) {
        sum.re = sum.re - re;
      } else {
        sum.re = sum.re + re;
      }
      if (!real_only) {
        BigReal im = coef * mag * sin(b * L);
        sum.im = (k % 2) ? sum.im - im : sum.im + im;
      }
      c *= n - k;
      c /= k + 1;
    }
    const bool ok = sum.re.error_log2() <= -target_bits && sum.im.error_log2() <= -target_bits;
    return std::make_pair(std::move(sum), ok);
  });
}

Rational bernoulli_even(long j) {
  static std::mutex mutex;
  static std::vector<Rational> b{Rational(1), Rational(-1, 2)};
  const auto m = static_cast<std::size_t>(2 * j);
  std::lock_guard<std::mutex> lock(mutex);
  // sum_{k=0}^{m} binom(m+1, k) B_k = 0
  while (b.size() <= m) {
    const std::size_t next = b.size();
    Rational s = 0;
    Integer binom = 1;
    for (std::size_t k = 0; k < next; ++k) {
      s += Rational(binom) * b[k];
      binom *= static_cast<unsigned long>(next + 1 - k);
      binom /= static_cast<unsigned long>(k + 1);
    }
    Rational bn = -s / Rational(binom);
    bn.canonicalize();
    b.push_back(bn);
  }
  return b[m];
}

namespace {

/// log2 of |B_{2j}| / ((2j)(2j-1)).
double stirling_coefficient_log2(long j) {
  return log2_abs(Rational(bernoulli_even(j) / Rational(2 * j * (2 * j - 1))));
}

BigReal log_gamma_shifted(const BigReal& z, Bits work) {
  // (z - 1/2) log z - z + log(2 pi)/2 + sum_j B_2j / (2j (2j-1) z^(2j-1))
  const BigReal half = BigReal::from(Rational(1, 2), work);
  const BigReal two_pi = BigReal::from(2L, work) * pi(work);
  BigReal s = (z - half) * log(z) - z + half * log(two_pi);
  const BigReal z2 = z * z;
  BigReal zpow = z;
  const double zd = z.to_double();
  for (long j = 1;; ++j) {
    const Rational c = bernoulli_even(j) / Rational(2 * j * (2 * j - 1));
    s = s + BigReal::from(c, work) / zpow;
    const double next = stirling_coefficient_log2(j + 1) - (2.0 * static_cast<double>(j) + 1.0) * std::log2(zd);
    if (next < -static_cast<double>(work) - 2 || j > 4 * work) return s.widened(pow2(next));
    zpow = zpow * z2;
  }
}

Bits work_precision(Bits bits) { return bits + 32; }

}  // namespace

BigReal gamma(const BigReal& x) {
  const Bits bits = x.precision();
  const Bits work = work_precision(bits);
  if (mpfr_integer_p(x.value().get()) && x.value().sign() <= 0)
    throw PoleAtNonpositiveInteger("Gamma has a pole at " + x.value().to_string(10));
  const BigReal xw(x.value().rounded(work), x.error());
  const BigReal one = BigReal::from(1L, work);
  if (mpfr_cmp_d(x.value().get(), 0.5) < 0) {
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    const BigReal p = pi(work);
    const BigReal r = p / (sin(p * xw) * gamma(one - xw));
    return {r.value().rounded(bits), add_up(r.error(), half_ulp(r.value().rounded(bits)))};
  }
  const double z0 = 0.12 * static_cast<double>(work) + 8.0;
  BigReal z = xw;
  BigReal prod = one;
  while (z.to_double() < z0) {
    prod = prod * z;
    z = z + one;
  }
  const BigReal r = exp(log_gamma_shifted(z, work)) / prod;
  Real v = r.value().rounded(bits);
  Real e = add_up(r.error(), half_ulp(v));
  return {std::move(v), std::move(e)};
}

BigReal gamma(const Rational& x, Bits bits) {
  if (x <= 0 && x.get_den() == 1) throw PoleAtNonpositiveInteger("Gamma has a pole at " + holo::to_string(x));
  return gamma(BigReal::from(x, bits));
}

namespace {

struct CBig {
  BigReal re, im;
};

CBig cadd(const CBig& a, const CBig& b) { return {a.re + b.re, a.im + b.im}; }
CBig csub(const CBig& a, const CBig& b) { return {a.re - b.re, a.im - b.im}; }
CBig cmul(const CBig& a, const CBig& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CBig cdiv(const CBig& a, const CBig& b) {
  const BigReal d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
CBig clog(const CBig& a) {
  const BigReal half = BigReal::from(Rational(1, 2), a.re.precision());
  return {half * log(a.re * a.re + a.im * a.im), atan2(a.im, a.re)};
}
CBig cexp(const CBig& a) {
  const BigReal m = exp(a.re);
  return {m * cos(a.im), m * sin(a.im)};
}

CBig complex_gamma(const CBig& z, Bits work) {
  const BigReal one = BigReal::from(1L, work);
  if (z.re.to_double() < 0.5) {
    // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    const BigReal p = pi(work);
    const BigReal a = p * z.re, b = p * z.im;
    const BigReal eb = exp(b), emb = exp(-b);
    const BigReal half = BigReal::from(Rational(1, 2), work);
    const BigReal ch = half * (eb + emb), sh = half * (eb - emb);
    const CBig s{sin(a) * ch, cos(a) * sh};
    const CBig g = complex_gamma({one - z.re, -z.im}, work);
    return cdiv({p, BigReal(work)}, cmul(s, g));
  }
  const double target = std::max(0.12 * static_cast<double>(work) + 8.0, 2.0 * std::fabs(z.im.to_double()));
  CBig w = z;
  CBig prod{one, BigReal(work)};
  while (w.re.to_double() < target) {
    prod = cmul(prod, w);
    w.re = w.re + one;
  }
  const BigReal half = BigReal::from(Rational(1, 2), work);
  const BigReal two_pi = BigReal::from(2L, work) * pi(work);
  const CBig lw = clog(w);
  CBig s = csub(cmul({w.re - half, w.im}, lw), w);
  s.re = s.re + half * log(two_pi);
  const CBig w2 = cmul(w, w);
  CBig wpow = w;
  const double wabs = std::hypot(w.re.to_double(), w.im.to_double());
  // |arg w| <= atan(1/2) here, so sec^(2J+2)(arg/2) <= 1.07^(J+1).
  for (long j = 1;; ++j) {
    const BigReal c = BigReal::from(bernoulli_even(j) / Rational(2 * j * (2 * j - 1)), work);
    s = cadd(s, cdiv({c, BigReal(work)}, wpow));
    const double next = stirling_coefficient_log2(j + 1) -
                        (2.0 * static_cast<double>(j) + 1.0) * std::log2(wabs) +
                        static_cast<double>(j + 2) * std::log2(1.07);
    if (next < -static_cast<double>(work) - 2 || j > 4 * work) {
      s.re = s.re.widened(pow2(next));
      s.im = s.im.widened(pow2(next));
      break;
    }
    wpow = cmul(wpow, w2);
  }
  return cdiv(cexp(s), prod);
}

}  // namespace

BigComplex gamma(const ComplexExponent& z, Bits bits) {
  if (z.im == 0) {
    BigReal r = gamma(z.re, bits);
    return {std::move(r), BigReal(bits)};
  }
  const Bits work = work_precision(bits);
  const CBig g = complex_gamma({BigReal::from(z.re, work), BigReal::from(z.im, work)}, work);
  auto round = [bits](const BigReal& x) {
    Real v = x.value().rounded(bits);
    Real e = add_up(x.error(), half_ulp(v));
    return BigReal(std::move(v), std::move(e));
  };
  return {round(g.re), round(g.im)};
}

BigReal lambert_w(const BigReal& x) {
  const Bits bits = x.precision();
  const Bits work = bits + 16;
  if (mpfr_cmp_d(x.value().get(), std::exp(1.0) * (1 - 1e-15)) < 0)
    throw std::domain_error("lambert_w expects x >= e");
  Real xv = x.value().rounded(work);
  Real w(work), t(work), ew(work), step(work);
  mpfr_log(w.get(), xv.get(), MPFR_RNDN);
  mpfr_log(t.get(), w.get(), MPFR_RNDN);
  mpfr_sub(w.get(), w.get(), t.get(), MPFR_RNDN);
  for (int it = 0; it < 200; ++it) {
    // w <- w - (w e^w - x) / (e^w (w + 1))
    mpfr_exp(ew.get(), w.get(), MPFR_RNDN);
    mpfr_mul(t.get(), w.get(), ew.get(), MPFR_RNDN);
    mpfr_sub(t.get(), t.get(), xv.get(), MPFR_RNDN);
    mpfr_add_ui(step.get(), w.get(), 1, MPFR_RNDN);
    mpfr_mul(step.get(), step.get(), ew.get(), MPFR_RNDN);
    mpfr_div(step.get(), t.get(), step.get(), MPFR_RNDN);
    mpfr_sub(w.get(), w.get(), step.get(), MPFR_RNDN);
    if (mpfr_zero_p(step.get()) || mpfr_get_exp(step.get()) < mpfr_get_exp(w.get()) - work + 2) break;
  }
  // |w - W(x)| <= |w e^w - x| / (e^w (1 + w)) up to second order; the factor 2 covers it.
  const BigReal wb(w, err_zero());
  const BigReal res = wb * exp(wb) - BigReal(xv, x.error());
  const BigReal slope = exp(wb) * (wb + BigReal::from(1L, work));
  Real e(kErrorBits);
  mpfr_div(e.get(), add_up(abs_up(res.value()), res.error()).get(), slope.value().get(), MPFR_RNDU);
  mpfr_mul_ui(e.get(), e.get(), 2, MPFR_RNDU);
  Real v = w.rounded(bits + kLambertGuardBits);
  e = add_up(e, half_ulp(v));
  return {std::move(v), std::move(e)};
}

namespace {

void harmonic_split(long a, long b, Integer& p, Integer& q) {
  if (b - a == 1) {
    p = 1;
    q = a;
    return;
  }
  const long m = a + (b - a) / 2;
  Integer p1, q1, p2, q2;
  harmonic_split(a, m, p1, q1);
  harmonic_split(m, b, p2, q2);
  p = p1 * q2 + p2 * q1;
  q = q1 * q2;
}

}  // namespace

Rational harmonic(long n) {
  if (n <= 0) return 0;
  Integer p, q;
  harmonic_split(1, n + 1, p, q);
  Rational h(p, q);
  h.canonicalize();
  return h;
}

BigReal harmonic_real(long n, Bits bits) {
  if (n <= 2000) return BigReal::from(harmonic(n), bits);
  const Bits work = bits + 16;
  // H_n = log n + gamma + 1/(2n) - sum_k B_2k / (2k n^2k)
  const BigReal nn = BigReal::from(n, work);
  BigReal s = log(nn) + euler_gamma(work) + BigReal::from(Rational(1, 2 * n), work);
  const BigReal n2 = nn * nn;
  BigReal npow = n2;
  for (long k = 1;; ++k) {
    s = s - BigReal::from(bernoulli_even(k) / Rational(2 * k), work) / npow;
    const double next = log2_abs(Rational(bernoulli_even(k + 1) / Rational(2 * k + 2))) -
                        2.0 * static_cast<double>(k + 1) * std::log2(static_cast<double>(n));
    if (next < -static_cast<double>(work)) {
      s = s.widened(pow2(next));
      break;
    }
    npow = npow * n2;
  }
  Real v = s.value().rounded(bits);
  Real e = add_up(s.error(), half_ulp(v));
  return {std::move(v), std::move(e)};
}

}  // namespace holo::hp
