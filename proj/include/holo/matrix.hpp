#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "holo/ratfun.hpp"

namespace holo {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
      for (const auto& x : r) data_.push_back(x);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Right nullspace over Q by fraction-free (Bareiss) elimination on the
/// row-scaled integer matrix. Basis vectors are primitive integer vectors
/// whose first nonzero entry is positive. Empty when the kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const Matrix<Rational>& m);

/// Right nullspace over Q(X). Rows are cleared of denominators and
/// Bareiss elimination runs over Q[X]; each basis vector is returned as
/// polynomials with no common factor, integer coefficients with gcd 1 and
/// a positive leading coefficient on the first nonzero entry.
std::vector<std::vector<Poly>> nullspace(const Matrix<RatFun>& m);

/// Default 62-bit prime used for modular rank filtering.
inline constexpr std::uint64_t kFilterPrime = 4611686018427387847ULL;  // 2^62 - 57

/// Rank of m reduced modulo p, or nullopt when some denominator vanishes
/// mod p. rank mod p never exceeds the rank over Q.
std::optional<std::size_t> rank_mod_p(const Matrix<Rational>& m, std::uint64_t p = kFilterPrime);

}  // namespace holo
