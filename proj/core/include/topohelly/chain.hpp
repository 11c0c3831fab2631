#pragma once

#include <string>
#include <vector>

#include "topohelly/cubical.hpp"
#include "topohelly/linalg.hpp"
#include "topohelly/simplicial.hpp"

namespace topohelly {

/// Cellular chain complex with integer boundary matrices.  boundary[p] maps
/// p-chains to (p-1)-chains (rows = ranks[p-1], cols = ranks[p]); boundary[0]
/// is the empty 0 x ranks[0] matrix.  Composing consecutive boundaries gives
/// zero exactly.
struct ChainComplex {
  int top_dim = -1;
  std::vector<std::size_t> ranks;       // size top_dim + 1
  std::vector<IntMatrix> boundary;      // size top_dim + 1
  std::vector<std::vector<std::string>> labels;  // cell labels per dimension

  bool empty() const { return top_dim < 0; }
  std::size_t rank_at(int p) const {
    return (p >= 0 && p <= top_dim) ? ranks[p] : 0;
  }
};

ChainComplex chain_complex(const SimplicialComplex& k);
ChainComplex chain_complex(const CubicalComplex& k);

/// Exact check that consecutive boundary maps compose to zero (sparse-aware,
/// cheap on boundary-type matrices).
bool boundary_condition_holds(const ChainComplex& c);

}  // namespace topohelly
