#pragma once

#include <stdexcept>
#include <string>

namespace holo {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p_0(n) vanishes at an index the recurrence must solve for.
class LeadingCoefficientZero : public Error {
 public:
  explicit LeadingCoefficientZero(long index)
      : Error("leading coefficient vanishes at n = " + std::to_string(index)),
        index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

class InconsistentInitialTerms : public Error {
 public:
  using Error::Error;
};

class InvalidOperator : public Error {
 public:
  using Error::Error;
};

class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

class DegenerateSubstitution : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class PoleAtNonpositiveInteger : public Error {
 public:
  using Error::Error;
};

class NonRationalPoint : public Error {
 public:
  using Error::Error;
};

class AlphaNegative : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input files (b-files, operator JSON).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace holo
