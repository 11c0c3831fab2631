#pragma once

#include <set>
#include <string>
#include <vector>

namespace topohelly {

using VertexId = int;

/// A simplex is a sorted, duplicate-free, non-empty vertex list.
using Simplex = std::vector<VertexId>;

/// Faces ordered by dimension first, then lexicographically, so each
/// dimension occupies a contiguous range of the face set.
struct SimplexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

std::string simplex_label(const Simplex& s);

/// Finite abstract simplicial complex: a downward-closed set of non-empty
/// faces over integer vertex ids.  Immutable in spirit; the only mutator is
/// closed insertion used by builders.
class SimplicialComplex {
 public:
  using cell_type = Simplex;

  SimplicialComplex() = default;

  /// Downward closure of the given facets.  Empty facet -> malformed input.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  /// A complex from cells already known to be downward closed.
  static SimplicialComplex from_closed_cells(std::set<Simplex, SimplexLess> cells);

  int dim() const;  // -1 when empty
  bool empty() const { return faces_.empty(); }
  std::size_t cell_count() const { return faces_.size(); }

  bool contains(const Simplex& s) const { return faces_.count(s) > 0; }
  const std::set<Simplex, SimplexLess>& cells() const { return faces_; }
  std::vector<Simplex> cells_of_dim(int p) const;
  std::vector<VertexId> vertices() const;

  /// Insert a simplex together with all of its subsets.
  void insert_closed(const Simplex& s);

  /// Insert without closure; caller guarantees faces are present.
  void insert_unchecked(Simplex s) { faces_.insert(std::move(s)); }

  /// Faces fully contained in the vertex set `s` (which must consist of
  /// known vertices).
  SimplicialComplex induced(const std::vector<VertexId>& s) const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool downward_closed() const;

  static SimplicialComplex intersection(const SimplicialComplex& a,
                                        const SimplicialComplex& b);
  static SimplicialComplex unite(const SimplicialComplex& a,
                                 const SimplicialComplex& b);

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::set<Simplex, SimplexLess> faces_;
};

/// Downward closure of the facets (the build_simplicial operation).
SimplicialComplex build_simplicial(const std::vector<Simplex>& facets);

/// Faces of K spanned by the vertex set S.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k,
                                     const std::vector<VertexId>& s);

}  // namespace topohelly
