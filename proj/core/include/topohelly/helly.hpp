#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topohelly/caps.hpp"
#include "topohelly/family.hpp"
#include "topohelly/nerve.hpp"

namespace topohelly {

/// Maximum number of members sharing one ambient cell, with a maximizer.
struct DepthResult {
  long depth = 0;
  std::string witness_cell;  // empty when depth == 0
};

template <class ComplexT>
DepthResult intersection_depth(const SetFamily<ComplexT>& family);

/// (number of (k+1)-subsets with non-empty intersection) / C(n, k+1), exact.
template <class ComplexT>
Rat alpha_fraction(const SetFamily<ComplexT>& family, int k);

/// Largest m in [0, n] with m <= (1 - (1-alpha)^{1/(k+1)}) * n, computed in
/// exact integer arithmetic (no floating point anywhere near the verdict).
long fractional_helly_floor(const Rat& alpha, long n, int k);

enum class HypothesisMode {
  verify,                    // run the acyclicity check (subject to caps)
  assume_by_construction,    // caller vouches (e.g. generated box families)
};

enum class HypothesisStatus { verified, assumed, failed };

/// Theorem-shaped fractional Helly report: if the family is
/// (k-|G|)-acyclic, some cell must lie in at least
/// floor((1 - (1-alpha)^{1/(k+1)}) n) members.
struct FractionalHellyReport {
  int n = 0;
  int k = 0;
  Int intersecting_subsets;  // (k+1)-subsets with non-empty intersection
  Int total_subsets;         // C(n, k+1)
  Rat alpha;
  long depth = 0;
  std::string depth_witness;
  long beta_n_floor = 0;
  bool verdict = false;  // depth >= beta_n_floor
  HypothesisStatus hypothesis = HypothesisStatus::failed;
  std::optional<AcyclicityReport> acyclicity;  // present when verified/failed
};

template <class ComplexT>
FractionalHellyReport fractional_helly_check(
    const SetFamily<ComplexT>& family, int k, const Caps& caps = {},
    HypothesisMode mode = HypothesisMode::verify);

/// Among any p members, some q have a common cell.  Vacuously true (and
/// flagged) when n < p.
struct PqResult {
  int p = 0, q = 0;
  bool holds = false;
  bool vacuous = false;
  std::vector<int> violating_subset;  // a p-subset with no intersecting q-subset
};

template <class ComplexT>
PqResult pq_condition(const SetFamily<ComplexT>& family, int p, int q,
                      const Caps& caps = {});

/// Exact transversal number by certified set-cover search over the ambient
/// cells (vertices suffice: members are downward closed).
struct TransversalResult {
  long tau = 0;
  std::vector<std::string> witness_cells;
  std::string method;  // "exhaustive" or "branch-and-bound"
};

template <class ComplexT>
TransversalResult transversal_number(const SetFamily<ComplexT>& family,
                                     const Caps& caps = {});

}  // namespace topohelly
