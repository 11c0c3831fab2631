#pragma once

#include <vector>

#include "topohelly/chain.hpp"
#include "topohelly/linalg.hpp"

namespace topohelly {

/// Per-dimension Betti numbers and torsion invariant factors.  The empty
/// complex gets a distinguished flag instead of reduced-homology bookkeeping
/// in dimension -1; callers that care test `empty_space` first.
struct HomologyResult {
  bool empty_space = false;
  bool reduced = true;
  std::vector<long> betti;                // dimensions 0..top
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1 per dim

  long betti_at(int p) const {
    return (p >= 0 && p < static_cast<int>(betti.size())) ? betti[p] : 0;
  }
  bool torsion_free() const;
  bool trivial() const;  // all reduced groups vanish (non-empty space)

  /// Largest n with a non-vanishing group, or -1 when all vanish.
  int top_nonvanishing() const;
};

struct HomologyOptions {
  bool check_boundary = true;  // verify d.d = 0 before computing
};

/// Reduced integer homology via Smith normal form on the augmented complex.
HomologyResult reduced_homology(const ChainComplex& c,
                                const HomologyOptions& opts = {});

/// Unreduced integer homology.
HomologyResult unreduced_homology(const ChainComplex& c,
                                  const HomologyOptions& opts = {});

/// Unreduced Betti numbers over Q (characteristic 0) or F_p.
std::vector<long> betti_numbers_field(const ChainComplex& c,
                                      std::uint32_t characteristic,
                                      const HomologyOptions& opts = {});

}  // namespace topohelly
