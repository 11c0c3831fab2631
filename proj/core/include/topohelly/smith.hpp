#pragma once

#include <optional>
#include <vector>

#include "topohelly/linalg.hpp"

namespace topohelly {

/// Result of diagonalizing an integer matrix by unimodular row/column
/// operations.  Invariant factors satisfy d_1 | d_2 | ... | d_r with d_i >= 1;
/// rank equals the number of factors.  When witnesses are requested,
/// U * M * V equals the diagonal matrix of the factors exactly.
struct SmithDecomposition {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> invariant_factors;
  std::optional<IntMatrix> left;   // U, rows x rows
  std::optional<IntMatrix> right;  // V, cols x cols

  long rank() const { return static_cast<long>(invariant_factors.size()); }

  /// Factors strictly greater than 1 (the torsion part).
  std::vector<Int> nontrivial_factors() const;

  /// The diagonal form as a full matrix (for witness checks).
  IntMatrix diagonal_matrix() const;
};

/// Smith normal form.  Pivot selection is by minimal absolute value to limit
/// coefficient growth; arithmetic is arbitrary precision throughout.
SmithDecomposition smith_normal_form(const IntMatrix& m,
                                     bool with_witnesses = false);

}  // namespace topohelly
