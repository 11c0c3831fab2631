#include "topohelly/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "topohelly/errors.hpp"

namespace topohelly {

std::string simplex_label(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<Simplex>& facets) {
  SimplicialComplex k;
  for (const Simplex& f : facets) k.insert_closed(f);
  return k;
}

SimplicialComplex SimplicialComplex::from_closed_cells(
    std::set<Simplex, SimplexLess> cells) {
  SimplicialComplex k;
  k.faces_ = std::move(cells);
  return k;
}

int SimplicialComplex::dim() const {
  if (faces_.empty()) return -1;
  return static_cast<int>(faces_.rbegin()->size()) - 1;
}

std::vector<Simplex> SimplicialComplex::cells_of_dim(int p) const {
  std::vector<Simplex> out;
  if (p < 0) return out;
  Simplex lo(static_cast<std::size_t>(p) + 1,
             std::numeric_limits<VertexId>::min());
  for (auto it = faces_.lower_bound(lo);
       it != faces_.end() && static_cast<int>(it->size()) == p + 1; ++it)
    out.push_back(*it);
  return out;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
  std::vector<VertexId> out;
  for (const Simplex& s : cells_of_dim(0)) out.push_back(s[0]);
  return out;
}

void SimplicialComplex::insert_closed(const Simplex& s) {
  if (s.empty())
    throw malformed_input_error("empty vertex set is not a simplex");
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // All non-empty subsets; facet sizes stay small at desk scale.
  const std::size_t n = sorted.size();
  if (n > 24) throw malformed_input_error("facet too large for closure");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) face.push_back(sorted[i]);
    faces_.insert(std::move(face));
  }
}

SimplicialComplex SimplicialComplex::induced(
    const std::vector<VertexId>& s) const {
  std::set<VertexId> allowed(s.begin(), s.end());
  const auto verts = vertices();
  for (VertexId v : allowed)
    if (!std::binary_search(verts.begin(), verts.end(), v))
      throw malformed_input_error("induced vertex set mentions unknown vertex " +
                                  std::to_string(v));
  std::set<Simplex, SimplexLess> out;
  for (const Simplex& f : faces_) {
    if (std::all_of(f.begin(), f.end(),
                    [&](VertexId v) { return allowed.count(v) > 0; }))
      out.insert(f);
  }
  return from_closed_cells(std::move(out));
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.faces_.begin(), other.faces_.end(),
                       faces_.begin(), faces_.end(), SimplexLess{});
}

bool SimplicialComplex::downward_closed() const {
  for (const Simplex& f : faces_) {
    if (f.size() == 1) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Simplex sub;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != i) sub.push_back(f[j]);
      if (!faces_.count(sub)) return false;
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::intersection(const SimplicialComplex& a,
                                                  const SimplicialComplex& b) {
  std::set<Simplex, SimplexLess> out;
  std::set_intersection(a.faces_.begin(), a.faces_.end(), b.faces_.begin(),
                        b.faces_.end(), std::inserter(out, out.begin()),
                        SimplexLess{});
  return from_closed_cells(std::move(out));
}

SimplicialComplex SimplicialComplex::unite(const SimplicialComplex& a,
                                           const SimplicialComplex& b) {
  std::set<Simplex, SimplexLess> out = a.faces_;
  out.insert(b.faces_.begin(), b.faces_.end());
  return from_closed_cells(std::move(out));
}

SimplicialComplex build_simplicial(const std::vector<Simplex>& facets) {
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k,
                                     const std::vector<VertexId>& s) {
  return k.induced(s);
}

}  // namespace topohelly
