#include "topohelly/chain.hpp"

#include <algorithm>
#include <map>

#include "topohelly/errors.hpp"

namespace topohelly {

namespace {

// Boundary faces of a simplex with alternating signs from ascending vertex
// order.
std::vector<std::pair<Simplex, int>> simplex_boundary(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.size() < 2) return out;
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) face.push_back(s[j]);
    out.emplace_back(std::move(face), sign);
    sign = -sign;
  }
  return out;
}

template <class ComplexT, class BoundaryFn, class LabelFn>
ChainComplex build_chain(const ComplexT& k, BoundaryFn boundary_of,
                         LabelFn label_of) {
  ChainComplex c;
  c.top_dim = k.dim();
  if (c.top_dim < 0) return c;

  using Cell = typename ComplexT::cell_type;
  std::vector<std::vector<Cell>> cells(c.top_dim + 1);
  for (int p = 0; p <= c.top_dim; ++p) cells[p] = k.cells_of_dim(p);

  std::vector<std::map<Cell, std::size_t>> index(c.top_dim + 1);
  for (int p = 0; p <= c.top_dim; ++p)
    for (std::size_t i = 0; i < cells[p].size(); ++i) index[p][cells[p][i]] = i;

  c.ranks.resize(c.top_dim + 1);
  c.labels.resize(c.top_dim + 1);
  c.boundary.resize(c.top_dim + 1);
  for (int p = 0; p <= c.top_dim; ++p) {
    c.ranks[p] = cells[p].size();
    for (const Cell& cell : cells[p]) c.labels[p].push_back(label_of(cell));
  }
  c.boundary[0] = IntMatrix(0, c.ranks[0]);
  for (int p = 1; p <= c.top_dim; ++p) {
    IntMatrix d(c.ranks[p - 1], c.ranks[p]);
    for (std::size_t j = 0; j < cells[p].size(); ++j) {
      for (const auto& [face, sign] : boundary_of(cells[p][j])) {
        const auto it = index[p - 1].find(face);
        if (it == index[p - 1].end())
          throw internal_consistency_error(
              "boundary face missing from complex (closure violated)");
        d(it->second, j) += sign;
      }
    }
    c.boundary[p] = std::move(d);
  }
  return c;
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& k) {
  return build_chain(k, simplex_boundary, simplex_label);
}

ChainComplex chain_complex(const CubicalComplex& k) {
  return build_chain(k, cube_boundary, cube_label);
}

bool boundary_condition_holds(const ChainComplex& c) {
  for (int p = 1; p < c.top_dim; ++p) {
    const IntMatrix& hi = c.boundary[p + 1];  // ranks[p] x ranks[p+1]
    const IntMatrix& lo = c.boundary[p];      // ranks[p-1] x ranks[p]
    if (lo.cols() != hi.rows()) return false;
    // Column-by-column sparse composition.
    for (std::size_t j = 0; j < hi.cols(); ++j) {
      std::vector<Int> acc(lo.rows());
      for (std::size_t k = 0; k < hi.rows(); ++k) {
        const Int& f = hi(k, j);
        if (f == 0) continue;
        for (std::size_t i = 0; i < lo.rows(); ++i) {
          const Int& v = lo(i, k);
          if (v != 0) acc[i] += f * v;
        }
      }
      for (const Int& v : acc)
        if (v != 0) return false;
    }
  }
  if (!c.empty()) {
    if (c.boundary.size() != c.ranks.size()) return false;
    for (int p = 1; p <= c.top_dim; ++p)
      if (c.boundary[p].rows() != c.ranks[p - 1] ||
          c.boundary[p].cols() != c.ranks[p])
        return false;
  }
  return true;
}

}  // namespace topohelly
