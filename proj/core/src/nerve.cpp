#include "topohelly/nerve.hpp"

#include <algorithm>

#include "subfamily_walk.hpp"

namespace topohelly {

namespace {

template <class ComplexT>
std::string first_cell_label(const ComplexT& k) {
  if constexpr (std::is_same_v<ComplexT, CubicalComplex>)
    return cube_label(*k.cells().begin());
  else
    return simplex_label(*k.cells().begin());
}

// Reduced homology keyed by the cell set, so repeated intersections (common
// in dense overlap patterns) are computed once.
template <class ComplexT>
class HomologyCache {
 public:
  const HomologyResult& of(const ComplexT& k) {
    std::vector<typename ComplexT::cell_type> key(k.cells().begin(),
                                                  k.cells().end());
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      HomologyResult h =
          reduced_homology(chain_complex(k), {.check_boundary = false});
      it = cache_.emplace(std::move(key), std::move(h)).first;
    }
    return it->second;
  }

 private:
  std::map<std::vector<typename ComplexT::cell_type>, HomologyResult> cache_;
};

bool nonvanishing_at(const HomologyResult& h, int n) {
  return h.betti_at(n) != 0 ||
         (n >= 0 && n < static_cast<int>(h.torsion.size()) &&
          !h.torsion[n].empty());
}

}  // namespace

template <class ComplexT>
NerveComplex nerve(const SetFamily<ComplexT>& family, const Caps& caps) {
  NerveComplex out;
  out.member_names = family.names;
  detail::walk_nonempty_intersections(
      family, caps, -1, [&](const std::vector<int>& j, const ComplexT& inter) {
        Simplex face(j.begin(), j.end());
        out.witness[face] = first_cell_label(inter);
        out.complex.insert_unchecked(std::move(face));
        return true;
      });
  return out;
}

template <class ComplexT>
AcyclicityReport is_k_acyclic_family(const SetFamily<ComplexT>& family, int k,
                                     const Caps& caps) {
  if (k < 0) throw malformed_input_error("k must be non-negative");
  AcyclicityReport report;
  report.k = k;
  HomologyCache<ComplexT> cache;
  detail::walk_nonempty_intersections(
      family, caps, -1, [&](const std::vector<int>& j, const ComplexT& inter) {
        ++report.subfamilies_checked;
        const int lower = k - static_cast<int>(j.size());
        const HomologyResult& h = cache.of(inter);
        const int top = static_cast<int>(h.betti.size()) - 1;
        for (int n = std::max(0, lower); n <= top; ++n) {
          if (nonvanishing_at(h, n))
            report.violations.push_back(
                {j, n, h.betti_at(n), h.torsion[n]});
        }
        return true;
      });
  report.verdict = report.violations.empty();
  return report;
}

template <class ComplexT>
GoodCoverResult is_good_cover_homological(const SetFamily<ComplexT>& family,
                                          const Caps& caps) {
  GoodCoverResult result;
  result.good = true;
  HomologyCache<ComplexT> cache;
  detail::walk_nonempty_intersections(
      family, caps, -1, [&](const std::vector<int>& j, const ComplexT& inter) {
        ++result.subfamilies_checked;
        const HomologyResult& h = cache.of(inter);
        if (h.trivial()) return true;
        const int n = [&] {
          for (int p = 0; p < static_cast<int>(h.betti.size()); ++p)
            if (nonvanishing_at(h, p)) return p;
          return 0;
        }();
        result.good = false;
        result.witness =
            AcyclicityViolation{j, n, h.betti_at(n), h.torsion[n]};
        return false;  // one witness is enough
      });
  return result;
}

LerayResult leray_number(const SimplicialComplex& k, const Caps& caps) {
  const std::vector<VertexId> verts = k.vertices();
  const int v = static_cast<int>(verts.size());
  if (v > caps.max_leray_vertices)
    throw resource_limit_error(
        "complex has " + std::to_string(v) +
        " vertices; induced-subcomplex enumeration capped at " +
        std::to_string(caps.max_leray_vertices));

  LerayResult out;
  for (std::uint32_t mask = 1; mask < (1u << v); ++mask) {
    std::vector<VertexId> s;
    for (int i = 0; i < v; ++i)
      if (mask & (1u << i)) s.push_back(verts[i]);
    const SimplicialComplex induced = k.induced(s);
    ++out.subcomplexes_checked;

    // Cones are acyclic; this skips the SNF on dense nerves (every induced
    // subcomplex of a simplex is a simplex).
    const bool cone = [&] {
      for (VertexId apex : s) {
        bool ok = true;
        for (const Simplex& f : induced.cells()) {
          if (std::binary_search(f.begin(), f.end(), apex)) continue;
          Simplex joined = f;
          joined.insert(std::lower_bound(joined.begin(), joined.end(), apex),
                        apex);
          if (!induced.contains(joined)) {
            ok = false;
            break;
          }
        }
        if (ok) return true;
      }
      return false;
    }();
    if (cone) continue;

    const HomologyResult h =
        reduced_homology(chain_complex(induced), {.check_boundary = false});
    const int top = h.top_nonvanishing();
    if (top >= 0 && (!out.worst || top > out.worst->dimension)) {
      out.worst = LerayWitness{s, top};
      out.leray = top + 1;
    }
  }
  return out;
}

template <class ComplexT>
int homological_connectivity(const ComplexT& c) {
  if (c.empty())
    throw empty_space_error("connectivity of the empty complex is undefined");
  const HomologyResult h =
      reduced_homology(chain_complex(c), {.check_boundary = false});
  for (int n = 0; n < static_cast<int>(h.betti.size()); ++n)
    if (nonvanishing_at(h, n)) return n - 1;
  return kFullyAcyclic;
}

template NerveComplex nerve(const SimplicialFamily&, const Caps&);
template NerveComplex nerve(const CubicalFamily&, const Caps&);
template AcyclicityReport is_k_acyclic_family(const SimplicialFamily&, int,
                                              const Caps&);
template AcyclicityReport is_k_acyclic_family(const CubicalFamily&, int,
                                              const Caps&);
template GoodCoverResult is_good_cover_homological(const SimplicialFamily&,
                                                   const Caps&);
template GoodCoverResult is_good_cover_homological(const CubicalFamily&,
                                                   const Caps&);
template int homological_connectivity(const SimplicialComplex&);
template int homological_connectivity(const CubicalComplex&);

}  // namespace topohelly
