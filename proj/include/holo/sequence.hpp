#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "holo/hpeval/real.hpp"
#include "holo/rational.hpp"

namespace holo {

enum class SequenceMode { exact, real };

/// Lazily extended term stream u_0, u_1, ...
///
/// Exact streams hold rationals; an optional producer extends the prefix
/// on demand and receives the prefix computed so far. Real streams hold
/// BigReal terms with error bounds; a pointwise producer evaluates u_n at
/// a requested precision. Copies share the cache.
class SequenceStream {
 public:
  using ExactProducer = std::function<Rational(long n, const std::vector<Rational>& prefix)>;
  using RealProducer = std::function<hp::BigReal(long n, hp::Bits bits)>;

  SequenceStream();
  static SequenceStream exact(std::vector<Rational> terms, ExactProducer producer = {});
  static SequenceStream pointwise(std::function<Rational(long)> f);
  static SequenceStream real(RealProducer producer);
  static SequenceStream real(std::vector<hp::BigReal> terms);

  SequenceMode mode() const;
  /// Number of terms available without calling a producer.
  std::size_t computed() const;
  /// Whether terms beyond the computed prefix can be produced.
  bool extendable() const;

  /// Exact term; extends the prefix as needed. Throws std::out_of_range
  /// past the end of a finite stream and std::logic_error in real mode.
  Rational exact_term(long n) const;
  /// Snapshot of terms 0..count-1 (exact mode).
  std::vector<Rational> exact_prefix(std::size_t count) const;
  /// Real term at the given precision; exact streams are rounded.
  hp::BigReal real_term(long n, hp::Bits bits) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Reads an OEIS-style b-file: lines "n value", '#' comments and blank
/// lines ignored. Indices must be consecutive; the first index is
/// returned through offset when non-null. Throws MalformedInput.
std::vector<Integer> read_bfile(std::istream& in, long* offset = nullptr);
std::vector<Integer> read_bfile(const std::string& path, long* offset = nullptr);

}  // namespace holo
