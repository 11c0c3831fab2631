#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace topohelly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix over the integers, row-major.  All homology and spectral
/// computations go through this type; arithmetic is arbitrary precision so
/// every rank, kernel and Smith form is exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;

  /// Horizontal concatenation [a | b]; row counts must agree (a 0x0 operand
  /// adopts the other side's row count).
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

  IntMatrix columns(const std::vector<std::size_t>& idx) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Dense matrix over the rationals; used for solved coefficients and the
/// spectral differentials on chosen representatives.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Rank over the rationals (fraction-free elimination; machine-word fast
/// path with automatic fallback to arbitrary precision on overflow).
long rank_q(const IntMatrix& m);

/// Integer basis of the rational null space, one column per basis vector.
/// Columns are primitive (content 1) with positive leading entry.
IntMatrix kernel_q(const IntMatrix& m);

/// Rank and kernel over the prime field F_p (p < 2^31 and prime).
long rank_fp(const IntMatrix& m, std::uint32_t p);
IntMatrix kernel_fp(const IntMatrix& m, std::uint32_t p);

/// Indices (into `candidates`) of a maximal subset of candidate columns that
/// extends a basis of span(fixed) to a basis of span(fixed | candidates).
std::vector<std::size_t> extending_columns(const IntMatrix& fixed,
                                           const IntMatrix& candidates,
                                           std::uint32_t characteristic);

/// Solve A X = B over Q (or over F_p when characteristic > 0); nullopt when
/// inconsistent.  Entries of the F_p solution are integers in [0, p).
std::optional<RatMatrix> solve_linear(const IntMatrix& a, const IntMatrix& b,
                                      std::uint32_t characteristic);

/// rank_q / rank_fp switched on characteristic (0 means Q).
long rank_field(const IntMatrix& m, std::uint32_t characteristic);
IntMatrix kernel_field(const IntMatrix& m, std::uint32_t characteristic);

bool is_prime(std::uint32_t n);

}  // namespace topohelly
