#include "topohelly/double_complex.hpp"

#include <algorithm>

#include "subfamily_walk.hpp"
#include "topohelly/chain.hpp"
#include "topohelly/errors.hpp"

namespace topohelly {

IntMatrix SparseMatrix::dense() const {
  IntMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, s] : entries[c]) out(r, c) += s;
  return out;
}

IntMatrix SparseMatrix::corner(std::size_t row_min,
                               std::size_t col_count) const {
  IntMatrix out(rows - row_min, col_count);
  for (std::size_t c = 0; c < col_count; ++c)
    for (const auto& [r, s] : entries[c])
      if (r >= row_min) out(r - row_min, c) += s;
  return out;
}

IntMatrix SparseMatrix::apply(const IntMatrix& m) const {
  return apply_cols(m, cols);
}

IntMatrix SparseMatrix::apply_cols(const IntMatrix& m,
                                   std::size_t col_count) const {
  if (m.rows() != col_count)
    throw internal_consistency_error("sparse apply shape mismatch");
  IntMatrix out(rows, m.cols());
  for (std::size_t c = 0; c < col_count; ++c)
    for (const auto& [r, s] : entries[c])
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Int& v = m(c, j);
        if (v != 0) out(r, j) += s > 0 ? v : -v;
      }
  return out;
}

const SparseMatrix* DoubleComplex::horiz_at(int p, int q) const {
  const auto it = horiz.find({p, q});
  return it == horiz.end() ? nullptr : &it->second;
}

const SparseMatrix* DoubleComplex::vert_at(int p, int q) const {
  const auto it = vert.find({p, q});
  return it == vert.end() ? nullptr : &it->second;
}

DoubleComplex DoubleComplex::transposed() const {
  DoubleComplex t;
  t.max_p = max_q;
  t.max_q = max_p;
  t.ranks.assign(t.max_p + 1, std::vector<std::size_t>(t.max_q + 1, 0));
  t.labels.assign(t.max_p + 1, {});
  for (int p = 0; p <= t.max_p; ++p) t.labels[p].resize(t.max_q + 1);
  for (int p = 0; p <= max_p; ++p)
    for (int q = 0; q <= max_q; ++q) {
      t.ranks[q][p] = ranks[p][q];
      t.labels[q][p] = labels[p][q];
    }
  for (const auto& [pq, m] : horiz) t.vert[{pq.second, pq.first}] = m;
  for (const auto& [pq, m] : vert) t.horiz[{pq.second, pq.first}] = m;
  return t;
}

std::size_t DoubleComplex::total_rank() const {
  std::size_t s = 0;
  for (const auto& row : ranks)
    for (std::size_t r : row) s += r;
  return s;
}

bool DoubleComplex::identities_hold() const {
  const auto compose_zero = [](const SparseMatrix* a, const SparseMatrix* b) {
    // a@b == 0 where b feeds into a.
    if (!a || !b) return true;
    const IntMatrix prod = a->dense() * b->dense();
    return prod.is_zero();
  };
  for (int p = 0; p <= max_p; ++p)
    for (int q = 0; q <= max_q; ++q) {
      if (!compose_zero(horiz_at(p - 1, q), horiz_at(p, q))) return false;
      if (!compose_zero(vert_at(p, q - 1), vert_at(p, q))) return false;
      // anticommutation: horiz.vert + vert.horiz = 0 into (p-1, q-1)
      const SparseMatrix* h = horiz_at(p, q);
      const SparseMatrix* v = vert_at(p, q);
      const SparseMatrix* h_down = horiz_at(p, q - 1);
      const SparseMatrix* v_left = vert_at(p - 1, q);
      if (rank_at(p, q) == 0 || rank_at(p - 1, q - 1) == 0) continue;
      IntMatrix sum(rank_at(p - 1, q - 1), rank_at(p, q));
      if (h && v_left) {
        const IntMatrix a = v_left->dense() * h->dense();
        for (std::size_t i = 0; i < sum.rows(); ++i)
          for (std::size_t j = 0; j < sum.cols(); ++j) sum(i, j) += a(i, j);
      }
      if (v && h_down) {
        const IntMatrix b = h_down->dense() * v->dense();
        for (std::size_t i = 0; i < sum.rows(); ++i)
          for (std::size_t j = 0; j < sum.cols(); ++j) sum(i, j) += b(i, j);
      }
      if (!sum.is_zero()) return false;
    }
  return true;
}

namespace {

template <class ComplexT>
struct FaceBlock {
  std::vector<int> indices;  // the subfamily J, ascending
  std::vector<std::vector<typename ComplexT::cell_type>> cells;  // per dim
};

template <class ComplexT>
std::string cell_label_of(const typename ComplexT::cell_type& c) {
  if constexpr (std::is_same_v<ComplexT, CubicalComplex>)
    return cube_label(c);
  else
    return simplex_label(c);
}

}  // namespace

template <class ComplexT>
DoubleComplex mayer_vietoris_double_complex(const SetFamily<ComplexT>& family,
                                            const Caps& caps) {
  using Cell = typename ComplexT::cell_type;

  // Gather the nerve faces with their intersections, grouped by |J|.
  std::vector<std::vector<FaceBlock<ComplexT>>> levels;  // [q] -> blocks
  detail::walk_nonempty_intersections(
      family, caps, -1, [&](const std::vector<int>& j, const ComplexT& inter) {
        const int q = static_cast<int>(j.size()) - 1;
        if (q >= static_cast<int>(levels.size())) levels.resize(q + 1);
        FaceBlock<ComplexT> block;
        block.indices = j;
        const int d = inter.dim();
        block.cells.resize(d + 1);
        for (int p = 0; p <= d; ++p) block.cells[p] = inter.cells_of_dim(p);
        levels[q].push_back(std::move(block));
        return true;
      });
  for (auto& level : levels)
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.indices < b.indices; });

  DoubleComplex dc;
  dc.max_q = static_cast<int>(levels.size()) - 1;
  dc.max_p = -1;
  for (const auto& level : levels)
    for (const auto& block : level)
      dc.max_p = std::max(dc.max_p,
                          static_cast<int>(block.cells.size()) - 1);
  if (dc.max_p < 0) {
    dc.max_q = -1;
    return dc;  // all members empty
  }

  dc.ranks.assign(dc.max_p + 1, std::vector<std::size_t>(dc.max_q + 1, 0));
  dc.labels.assign(dc.max_p + 1, {});
  for (int p = 0; p <= dc.max_p; ++p) dc.labels[p].resize(dc.max_q + 1);

  // Block offsets: offset[q][face][p] = start of that face's p-cells within
  // C_{p,q}; plus a cell -> local index lookup per face and dim.
  std::vector<std::vector<std::vector<std::size_t>>> offset(levels.size());
  std::vector<std::vector<std::map<std::vector<int>, std::size_t>>> face_pos(
      levels.size());
  for (std::size_t q = 0; q < levels.size(); ++q) {
    offset[q].resize(levels[q].size());
    for (std::size_t f = 0; f < levels[q].size(); ++f) {
      const auto& block = levels[q][f];
      offset[q][f].assign(dc.max_p + 1, 0);
      for (int p = 0; p <= dc.max_p; ++p) {
        const std::size_t count =
            p < static_cast<int>(block.cells.size()) ? block.cells[p].size()
                                                     : 0;
        offset[q][f][p] = dc.ranks[p][q];
        dc.ranks[p][q] += count;
        for (std::size_t i = 0; i < count; ++i)
          dc.labels[p][q].push_back("J=" + simplex_label(Simplex(
                                        block.indices.begin(),
                                        block.indices.end())) +
                                    " " +
                                    cell_label_of<ComplexT>(block.cells[p][i]));
      }
    }
  }
  // Face lookup by index set, per level.
  std::vector<std::map<std::vector<int>, std::size_t>> face_index(
      levels.size());
  for (std::size_t q = 0; q < levels.size(); ++q)
    for (std::size_t f = 0; f < levels[q].size(); ++f)
      face_index[q][levels[q][f].indices] = f;

  // Horizontal differential: cellular boundary inside every block.
  for (std::size_t q = 0; q < levels.size(); ++q) {
    for (int p = 1; p <= dc.max_p; ++p) {
      if (dc.ranks[p][q] == 0) continue;
      SparseMatrix m(dc.ranks[p - 1][q], dc.ranks[p][q]);
      for (std::size_t f = 0; f < levels[q].size(); ++f) {
        const auto& block = levels[q][f];
        if (p >= static_cast<int>(block.cells.size())) continue;
        const auto& lower = block.cells[p - 1];
        for (std::size_t i = 0; i < block.cells[p].size(); ++i) {
          const Cell& cell = block.cells[p][i];
          auto add_face = [&](const Cell& face, int sign) {
            const auto it =
                std::lower_bound(lower.begin(), lower.end(), face);
            if (it == lower.end() || !(*it == face))
              throw internal_consistency_error(
                  "intersection complex not closed under boundary");
            m.add(offset[q][f][p - 1] + (it - lower.begin()),
                  offset[q][f][p] + i, sign);
          };
          if constexpr (std::is_same_v<ComplexT, CubicalComplex>) {
            for (const auto& [face, sign] : cube_boundary(cell))
              add_face(face, sign);
          } else {
            if (cell.size() >= 2) {
              int sign = 1;
              for (std::size_t v = 0; v < cell.size(); ++v) {
                Cell face;
                for (std::size_t w = 0; w < cell.size(); ++w)
                  if (w != v) face.push_back(cell[w]);
                add_face(face, sign);
                sign = -sign;
              }
            }
          }
        }
      }
      dc.horiz[{p, static_cast<int>(q)}] = std::move(m);
    }
  }

  // Vertical differential: alternating sum of the deletion inclusions with
  // the (-1)^p twist.
  for (std::size_t q = 1; q < levels.size(); ++q) {
    for (int p = 0; p <= dc.max_p; ++p) {
      if (dc.ranks[p][q] == 0 || dc.ranks[p][q - 1] == 0) continue;
      SparseMatrix m(dc.ranks[p][q - 1], dc.ranks[p][q]);
      const int p_sign = (p % 2 == 0) ? 1 : -1;
      for (std::size_t f = 0; f < levels[q].size(); ++f) {
        const auto& block = levels[q][f];
        if (p >= static_cast<int>(block.cells.size())) continue;
        for (std::size_t del = 0; del < block.indices.size(); ++del) {
          std::vector<int> sub;
          for (std::size_t t = 0; t < block.indices.size(); ++t)
            if (t != del) sub.push_back(block.indices[t]);
          const std::size_t tf = face_index[q - 1].at(sub);
          const auto& target = levels[q - 1][tf];
          if (p >= static_cast<int>(target.cells.size()))
            throw internal_consistency_error(
                "inclusion target misses a dimension of a smaller subfamily");
          const int sign = p_sign * ((del % 2 == 0) ? 1 : -1);
          const auto& target_cells = target.cells[p];
          for (std::size_t i = 0; i < block.cells[p].size(); ++i) {
            const Cell& cell = block.cells[p][i];
            const auto it = std::lower_bound(target_cells.begin(),
                                             target_cells.end(), cell);
            if (it == target_cells.end() || !(*it == cell))
              throw internal_consistency_error(
                  "inclusion target misses a cell of a smaller subfamily");
            m.add(offset[q - 1][tf][p] + (it - target_cells.begin()),
                  offset[q][f][p] + i, sign);
          }
        }
      }
      dc.vert[{p, static_cast<int>(q)}] = std::move(m);
    }
  }
  return dc;
}

template DoubleComplex mayer_vietoris_double_complex(const SimplicialFamily&,
                                                     const Caps&);
template DoubleComplex mayer_vietoris_double_complex(const CubicalFamily&,
                                                     const Caps&);

}  // namespace topohelly
