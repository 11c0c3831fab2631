#include "topohelly/cubical.hpp"

#include <algorithm>

#include "topohelly/errors.hpp"

namespace topohelly {

std::string cube_label(const Cube& c) {
  std::string out = "[";
  for (int a = 0; a < c.ambient_dim(); ++a) {
    if (a) out += "x";
    out += "(" + std::to_string(c.base[a]) + "," +
           std::to_string(c.base[a] + (c.interval_unit(a) ? 1 : 0)) + ")";
  }
  out += "]";
  return out;
}

std::vector<Cube> cube_faces(const Cube& c) {
  std::vector<Cube> out{c};
  for (int a = 0; a < c.ambient_dim(); ++a) {
    if (!c.interval_unit(a)) continue;
    const std::size_t fixed = out.size();
    for (std::size_t i = 0; i < fixed; ++i) {
      Cube lo = out[i];
      if (!lo.interval_unit(a)) continue;
      lo.extent &= ~(1u << a);
      Cube hi = lo;
      hi.base[a] += 1;
      out.push_back(lo);
      out.push_back(hi);
    }
  }
  return out;
}

std::vector<std::pair<Cube, int>> cube_boundary(const Cube& c) {
  // d(Q1 x Q2) = dQ1 x Q2 + (-1)^{dim Q1} Q1 x dQ2, with d[a,a+1] = [a+1]-[a].
  std::vector<std::pair<Cube, int>> out;
  int sign = 1;
  for (int a = 0; a < c.ambient_dim(); ++a) {
    if (!c.interval_unit(a)) continue;
    Cube lo = c;
    lo.extent &= ~(1u << a);
    Cube hi = lo;
    hi.base[a] += 1;
    out.emplace_back(hi, sign);
    out.emplace_back(lo, -sign);
    sign = -sign;
  }
  return out;
}

CubicalComplex CubicalComplex::from_cubes(int ambient_dim,
                                          const std::vector<Cube>& cubes) {
  CubicalComplex k(ambient_dim);
  for (const Cube& c : cubes) k.insert_closed(c);
  return k;
}

CubicalComplex CubicalComplex::from_closed_cells(int ambient_dim,
                                                 std::set<Cube> cells) {
  CubicalComplex k(ambient_dim);
  k.cells_ = std::move(cells);
  return k;
}

int CubicalComplex::dim() const {
  int d = -1;
  for (const Cube& c : cells_) d = std::max(d, c.dim());
  return d;
}

std::vector<Cube> CubicalComplex::cells_of_dim(int p) const {
  std::vector<Cube> out;
  for (const Cube& c : cells_)
    if (c.dim() == p) out.push_back(c);
  return out;
}

void CubicalComplex::insert_closed(const Cube& c) {
  if (static_cast<int>(c.base.size()) != ambient_dim_)
    throw malformed_input_error("cube does not match ambient grid dimension");
  if (c.extent >= (1u << ambient_dim_))
    throw malformed_input_error("cube extent flags outside ambient dimension");
  for (Cube& f : cube_faces(c)) cells_.insert(std::move(f));
}

bool CubicalComplex::is_subcomplex_of(const CubicalComplex& other) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  return std::includes(other.cells_.begin(), other.cells_.end(),
                       cells_.begin(), cells_.end());
}

bool CubicalComplex::closed_under_faces() const {
  for (const Cube& c : cells_)
    for (const Cube& f : cube_faces(c))
      if (!cells_.count(f)) return false;
  return true;
}

CubicalComplex CubicalComplex::intersection(const CubicalComplex& a,
                                            const CubicalComplex& b) {
  if (a.ambient_dim_ != b.ambient_dim_)
    throw malformed_input_error("intersection across different grids");
  std::set<Cube> out;
  std::set_intersection(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                        b.cells_.end(), std::inserter(out, out.begin()));
  return from_closed_cells(a.ambient_dim_, std::move(out));
}

CubicalComplex CubicalComplex::unite(const CubicalComplex& a,
                                     const CubicalComplex& b) {
  if (a.ambient_dim_ != b.ambient_dim_)
    throw malformed_input_error("union across different grids");
  std::set<Cube> out = a.cells_;
  out.insert(b.cells_.begin(), b.cells_.end());
  return from_closed_cells(a.ambient_dim_, std::move(out));
}

}  // namespace topohelly
