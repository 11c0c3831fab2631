#include "topohelly/helly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "subfamily_walk.hpp"
#include "topohelly/errors.hpp"

namespace topohelly {

namespace {

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

template <class ComplexT>
std::string cell_label_of(const typename ComplexT::cell_type& c) {
  if constexpr (std::is_same_v<ComplexT, CubicalComplex>)
    return cube_label(c);
  else
    return simplex_label(c);
}

// Enumeration caps for the polynomial-depth walks (alpha, pq): the family
// size cap does not apply since the walk is cut at a fixed subset size.
Caps uncapped_family(const Caps& caps, int n) {
  Caps c = caps;
  c.max_family = std::max(c.max_family, n);
  return c;
}

}  // namespace

template <class ComplexT>
DepthResult intersection_depth(const SetFamily<ComplexT>& family) {
  DepthResult out;
  for (const auto& cell : family.ambient.cells()) {
    long count = 0;
    for (const ComplexT& m : family.members)
      if (m.contains(cell)) ++count;
    if (count > out.depth) {
      out.depth = count;
      out.witness_cell = cell_label_of<ComplexT>(cell);
    }
  }
  return out;
}

template <class ComplexT>
Rat alpha_fraction(const SetFamily<ComplexT>& family, int k) {
  const int n = family.size();
  if (k < 0 || k + 1 > n)
    throw malformed_input_error("alpha fraction needs 0 <= k and k+1 <= n");
  long hits = 0;
  detail::walk_nonempty_intersections(
      family, uncapped_family({}, n), k + 1,
      [&](const std::vector<int>& j, const ComplexT&) {
        if (static_cast<int>(j.size()) == k + 1) ++hits;
        return true;
      });
  return Rat(Int(hits), binomial(n, k + 1));
}

long fractional_helly_floor(const Rat& alpha, long n, int k) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (alpha < 0 || alpha > 1)
    throw malformed_input_error("alpha must lie in [0, 1]");
  // m <= (1 - (1-alpha)^{1/(k+1)})*n  <=>  (1-alpha)*n^{k+1} <= (n-m)^{k+1}.
  const Rat rest = Rat(1) - alpha;
  const Int a = Int(numerator(rest));
  const Int b = Int(denominator(rest));
  Int n_pow = 1;
  for (int i = 0; i <= k; ++i) n_pow *= n;
  for (long m = n; m >= 1; --m) {
    Int gap_pow = 1;
    for (int i = 0; i <= k; ++i) gap_pow *= (n - m);
    if (a * n_pow <= b * gap_pow) return m;
  }
  return 0;
}

template <class ComplexT>
FractionalHellyReport fractional_helly_check(const SetFamily<ComplexT>& family,
                                             int k, const Caps& caps,
                                             HypothesisMode mode) {
  FractionalHellyReport out;
  out.n = family.size();
  out.k = k;

  if (mode == HypothesisMode::verify) {
    out.acyclicity = is_k_acyclic_family(family, k, caps);
    out.hypothesis = out.acyclicity->verdict ? HypothesisStatus::verified
                                             : HypothesisStatus::failed;
  } else {
    out.hypothesis = HypothesisStatus::assumed;
  }

  out.total_subsets = binomial(out.n, k + 1);
  long hits = 0;
  detail::walk_nonempty_intersections(
      family, uncapped_family(caps, out.n), k + 1,
      [&](const std::vector<int>& j, const ComplexT&) {
        if (static_cast<int>(j.size()) == k + 1) ++hits;
        return true;
      });
  out.intersecting_subsets = hits;
  if (out.total_subsets == 0)
    throw malformed_input_error(
        "fractional Helly needs at least k+1 members");
  out.alpha = Rat(out.intersecting_subsets, out.total_subsets);

  const DepthResult depth = intersection_depth(family);
  out.depth = depth.depth;
  out.depth_witness = depth.witness_cell;
  out.beta_n_floor = fractional_helly_floor(out.alpha, out.n, k);
  out.verdict = out.depth >= out.beta_n_floor;
  return out;
}

template <class ComplexT>
PqResult pq_condition(const SetFamily<ComplexT>& family, int p, int q,
                      const Caps& caps) {
  if (q < 1 || p < q)
    throw malformed_input_error("need p >= q >= 1");
  PqResult out;
  out.p = p;
  out.q = q;
  const int n = family.size();
  if (n < p) {
    out.holds = true;
    out.vacuous = true;
    return out;
  }
  if (n > 62) throw resource_limit_error("pq check limited to 62 members");

  // All q-subsets with non-empty intersection, as member bitmasks.
  std::vector<std::uint64_t> good;
  detail::walk_nonempty_intersections(
      family, uncapped_family(caps, n), q,
      [&](const std::vector<int>& j, const ComplexT&) {
        if (static_cast<int>(j.size()) == q) {
          std::uint64_t m = 0;
          for (int i : j) m |= (1ull << i);
          good.push_back(m);
        }
        return true;
      });

  // Walk the p-subsets; each must contain one of the good masks.
  std::vector<int> comb(p);
  for (int i = 0; i < p; ++i) comb[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : comb) mask |= (1ull << i);
    const bool ok = std::any_of(good.begin(), good.end(), [&](std::uint64_t g) {
      return (g & mask) == g;
    });
    if (!ok) {
      out.holds = false;
      out.violating_subset = comb;
      return out;
    }
    int i = p - 1;
    while (i >= 0 && comb[i] == n - p + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
  }
  out.holds = true;
  return out;
}

namespace {

struct CoverSearch {
  int n = 0;
  std::vector<std::uint64_t> masks;
  std::vector<std::size_t> mask_cell;  // representative cell per mask
  std::uint64_t full = 0;

  // Exact minimum cover by iterative deepening; returns chosen mask indices.
  std::vector<std::size_t> solve(long budget) const {
    std::vector<std::size_t> chosen;
    return dfs(full, budget, chosen) ? chosen : std::vector<std::size_t>{};
  }

  bool dfs(std::uint64_t uncovered, long budget,
           std::vector<std::size_t>& chosen) const {
    if (uncovered == 0) return true;
    if (budget == 0) return false;
    // Cheap bound: each pick covers at most max-popcount new members.
    int best_gain = 0;
    for (std::uint64_t m : masks)
      best_gain = std::max(best_gain, __builtin_popcountll(m & uncovered));
    if (best_gain == 0) return false;
    if (__builtin_popcountll(uncovered) > best_gain * budget) return false;

    // Branch on the hardest member: the uncovered one with fewest options.
    int pick = -1;
    std::size_t fewest = masks.size() + 1;
    for (int i = 0; i < n; ++i) {
      if (!(uncovered & (1ull << i))) continue;
      std::size_t options = 0;
      for (std::uint64_t m : masks)
        if (m & (1ull << i)) ++options;
      if (options < fewest) {
        fewest = options;
        pick = i;
      }
    }
    if (fewest == 0) return false;
    for (std::size_t mi = 0; mi < masks.size(); ++mi) {
      if (!(masks[mi] & (1ull << pick))) continue;
      chosen.push_back(mi);
      if (dfs(uncovered & ~masks[mi], budget - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

template <class ComplexT>
TransversalResult transversal_number(const SetFamily<ComplexT>& family,
                                     const Caps& caps) {
  (void)caps;
  const int n = family.size();
  TransversalResult out;
  out.method = "exhaustive";
  if (n == 0) return out;
  if (n > 62) throw resource_limit_error("transversal limited to 62 members");
  for (int i = 0; i < n; ++i)
    if (family.members[i].empty())
      throw malformed_input_error("member " + family.names[i] +
                                  " is empty and cannot be pierced");

  // Vertex candidates suffice: members are downward closed, so the vertices
  // of any shared cell are shared too.
  CoverSearch search;
  search.n = n;
  search.full = (1ull << n) - 1;
  std::map<std::uint64_t, std::string> by_mask;
  for (const auto& cell : family.ambient.cells()) {
    if constexpr (std::is_same_v<ComplexT, CubicalComplex>) {
      if (cell.dim() != 0) continue;
    } else {
      if (cell.size() != 1) continue;
    }
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i)
      if (family.members[i].contains(cell)) m |= (1ull << i);
    if (m != 0 && !by_mask.count(m))
      by_mask.emplace(m, cell_label_of<ComplexT>(cell));
  }
  // Dominance pruning: keep only maximal masks.
  std::vector<std::pair<std::uint64_t, std::string>> entries(by_mask.begin(),
                                                             by_mask.end());
  std::vector<std::string> labels;
  for (const auto& [m, label] : entries) {
    const bool dominated =
        std::any_of(entries.begin(), entries.end(), [&](const auto& other) {
          return other.first != m && (other.first & m) == m;
        });
    if (!dominated) {
      search.masks.push_back(m);
      labels.push_back(label);
    }
  }

  // Iterative deepening certifies minimality: every size below tau is
  // exhausted before tau is accepted.
  for (long t = 1; t <= n; ++t) {
    const std::vector<std::size_t> cover = search.solve(t);
    if (cover.empty()) continue;
    out.tau = t;
    for (std::size_t mi : cover) out.witness_cells.push_back(labels[mi]);
    out.method = t <= 3 ? "exhaustive" : "branch-and-bound";
    return out;
  }
  throw internal_consistency_error("no transversal found below family size");
}

template DepthResult intersection_depth(const SimplicialFamily&);
template DepthResult intersection_depth(const CubicalFamily&);
template Rat alpha_fraction(const SimplicialFamily&, int);
template Rat alpha_fraction(const CubicalFamily&, int);
template FractionalHellyReport fractional_helly_check(const SimplicialFamily&,
                                                      int, const Caps&,
                                                      HypothesisMode);
template FractionalHellyReport fractional_helly_check(const CubicalFamily&,
                                                      int, const Caps&,
                                                      HypothesisMode);
template PqResult pq_condition(const SimplicialFamily&, int, int, const Caps&);
template PqResult pq_condition(const CubicalFamily&, int, int, const Caps&);
template TransversalResult transversal_number(const SimplicialFamily&,
                                              const Caps&);
template TransversalResult transversal_number(const CubicalFamily&,
                                              const Caps&);

}  // namespace topohelly
