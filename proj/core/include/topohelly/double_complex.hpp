#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "topohelly/caps.hpp"
#include "topohelly/family.hpp"
#include "topohelly/linalg.hpp"

namespace topohelly {

/// Column-sparse integer matrix; the double-complex differentials have all
/// entries in {-1, 0, +1}, so signs are stored in a byte.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> entries;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(c) {}

  void add(std::size_t row, std::size_t col, int sign) {
    entries[col].emplace_back(static_cast<std::uint32_t>(row),
                              static_cast<std::int8_t>(sign));
  }

  IntMatrix dense() const;
  /// Dense corner block: rows >= row_min, the first col_count columns.
  IntMatrix corner(std::size_t row_min, std::size_t col_count) const;
  /// this * m (dense result).
  IntMatrix apply(const IntMatrix& m) const;
  /// this * m restricted to the first col_count columns of this.
  IntMatrix apply_cols(const IntMatrix& m, std::size_t col_count) const;
};

/// First-quadrant bigraded complex C_{p,q} with anticommuting differentials:
/// horiz : (p,q) -> (p-1,q) is the blockwise cellular boundary, and
/// vert  : (p,q) -> (p,q-1) is the alternating inclusion sum carrying the
/// (-1)^p twist that makes the two anticommute.
struct DoubleComplex {
  int max_p = -1;
  int max_q = -1;
  std::vector<std::vector<std::size_t>> ranks;  // [p][q], (max_p+1)x(max_q+1)
  std::map<std::pair<int, int>, SparseMatrix> horiz;
  std::map<std::pair<int, int>, SparseMatrix> vert;
  std::vector<std::vector<std::vector<std::string>>> labels;  // [p][q][i]

  std::size_t rank_at(int p, int q) const {
    if (p < 0 || q < 0 || p > max_p || q > max_q) return 0;
    return ranks[p][q];
  }
  const SparseMatrix* horiz_at(int p, int q) const;
  const SparseMatrix* vert_at(int p, int q) const;

  /// Swap the two gradings (and the two differentials); the second
  /// filtration of C is the first filtration of the transpose.
  DoubleComplex transposed() const;

  /// Exact check of d@d = 0 for both differentials and the anticommutation
  /// law; used by constructors' tests and the total-complex builder.
  bool identities_hold() const;

  std::size_t total_rank() const;
};

/// The Mayer-Vietoris double complex of a family: C_{p,q} is the direct sum
/// over the (q+1)-element index sets J with non-empty intersection of the
/// cellular p-chains of that intersection.
template <class ComplexT>
DoubleComplex mayer_vietoris_double_complex(const SetFamily<ComplexT>& family,
                                            const Caps& caps = {});

}  // namespace topohelly
