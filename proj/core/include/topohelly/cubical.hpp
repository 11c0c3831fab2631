#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace topohelly {

/// Elementary cube in an integer grid: a product of d intervals, each either
/// degenerate [a,a] or unit [a,a+1].  `base` holds the lower endpoints and
/// `extent` flags the unit intervals.
struct Cube {
  std::vector<int> base;
  std::uint32_t extent = 0;

  int dim() const { return __builtin_popcount(extent); }
  int ambient_dim() const { return static_cast<int>(base.size()); }
  bool interval_unit(int axis) const { return extent & (1u << axis); }

  auto operator<=>(const Cube&) const = default;
};

std::string cube_label(const Cube& c);

/// Finite cubical complex on an integer grid, stored closed (every face of a
/// stored cube is stored).
class CubicalComplex {
 public:
  using cell_type = Cube;

  CubicalComplex() = default;
  explicit CubicalComplex(int ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Closure of the given cubes.
  static CubicalComplex from_cubes(int ambient_dim,
                                   const std::vector<Cube>& cubes);
  static CubicalComplex from_closed_cells(int ambient_dim,
                                          std::set<Cube> cells);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const;  // -1 when empty
  bool empty() const { return cells_.empty(); }
  std::size_t cell_count() const { return cells_.size(); }

  bool contains(const Cube& c) const { return cells_.count(c) > 0; }
  const std::set<Cube>& cells() const { return cells_; }
  std::vector<Cube> cells_of_dim(int p) const;

  void insert_closed(const Cube& c);

  bool is_subcomplex_of(const CubicalComplex& other) const;
  bool closed_under_faces() const;

  static CubicalComplex intersection(const CubicalComplex& a,
                                     const CubicalComplex& b);
  static CubicalComplex unite(const CubicalComplex& a, const CubicalComplex& b);

  bool operator==(const CubicalComplex&) const = default;

 private:
  int ambient_dim_ = 0;
  std::set<Cube> cells_;
};

/// All faces of a cube (including itself): one choice of keep / collapse-low /
/// collapse-high per unit interval.
std::vector<Cube> cube_faces(const Cube& c);

/// Facets (codimension-one faces) with the boundary signs of the standard
/// cubical boundary operator.
std::vector<std::pair<Cube, int>> cube_boundary(const Cube& c);

}  // namespace topohelly
