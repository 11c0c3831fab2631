#include "topohelly/smith.hpp"

#include <algorithm>

#include "topohelly/errors.hpp"

namespace topohelly {

std::vector<Int> SmithDecomposition::nontrivial_factors() const {
  std::vector<Int> out;
  for (const Int& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

IntMatrix SmithDecomposition::diagonal_matrix() const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    d(i, i) = invariant_factors[i];
  return d;
}

namespace {

using boost::multiprecision::abs;

struct Worker {
  IntMatrix a;
  std::optional<IntMatrix> u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) std::swap((*u)(i, c), (*u)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r) std::swap((*v)(r, i), (*v)(r, j));
  }
  // row i -= q * row j
  void row_axpy(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) (*u)(i, c) -= q * (*u)(j, c);
  }
  // col i -= q * col j
  void col_axpy(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r) (*v)(r, i) -= q * (*v)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) (*u)(i, c) = -(*u)(i, c);
  }
};

// Smallest nonzero entry (by absolute value) of the trailing submatrix.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& x = a(i, j);
      if (x == 0) continue;
      if (!found || abs(x) < best) {
        best = abs(x);
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m, bool with_witnesses) {
  Worker w{m, std::nullopt, std::nullopt};
  if (with_witnesses) {
    w.u = IntMatrix::identity(m.rows());
    w.v = IntMatrix::identity(m.cols());
  }
  IntMatrix& a = w.a;

  const std::size_t bound = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  while (t < bound) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(a, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear the pivot column.  When a remainder survives it is strictly
      // smaller than the pivot, so swapping it up makes progress.
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Int q = a(i, t) / a(t, t);
        w.row_axpy(i, t, q);
        if (a(i, t) != 0) {
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Int q = a(t, j) / a(t, t);
        w.col_axpy(j, t, q);
        if (a(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility fixup: fold a non-divisible entry into the pivot row
      // and keep reducing.
      for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
        for (std::size_t j = t + 1; j < a.cols() && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            w.row_axpy(t, i, Int(-1));
            clean = false;
          }
    }
    if (a(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithDecomposition out;
  out.rows = m.rows();
  out.cols = m.cols();
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  out.left = std::move(w.u);
  out.right = std::move(w.v);

  for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
    if (out.invariant_factors[i + 1] % out.invariant_factors[i] != 0)
      throw internal_consistency_error("smith normal form lost divisibility");
  return out;
}

}  // namespace topohelly
