#include "topohelly/homology.hpp"

#include <algorithm>

#include "topohelly/errors.hpp"
#include "topohelly/smith.hpp"

namespace topohelly {

bool HomologyResult::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(),
                     [](const auto& t) { return t.empty(); });
}

bool HomologyResult::trivial() const {
  if (empty_space) return false;
  return std::all_of(betti.begin(), betti.end(),
                     [](long b) { return b == 0; }) &&
         torsion_free();
}

int HomologyResult::top_nonvanishing() const {
  for (int p = static_cast<int>(betti.size()) - 1; p >= 0; --p)
    if (betti[p] != 0 || !torsion[p].empty()) return p;
  return -1;
}

namespace {

void ensure_valid(const ChainComplex& c, const HomologyOptions& opts) {
  if (opts.check_boundary && !boundary_condition_holds(c))
    throw internal_consistency_error(
        "chain complex boundary maps do not compose to zero");
}

HomologyResult homology_impl(const ChainComplex& c, bool reduced) {
  HomologyResult out;
  out.reduced = reduced;
  if (c.empty()) {
    out.empty_space = true;
    return out;
  }

  // Smith form of each boundary map; for the reduced variant the
  // augmentation map C_0 -> Z contributes one extra rank at the bottom.
  std::vector<long> rank_of_boundary(c.top_dim + 2, 0);
  std::vector<std::vector<Int>> factors(c.top_dim + 2);
  for (int p = 1; p <= c.top_dim; ++p) {
    SmithDecomposition snf = smith_normal_form(c.boundary[p]);
    rank_of_boundary[p] = snf.rank();
    factors[p] = snf.nontrivial_factors();
  }

  const long aug_rank = reduced && c.ranks[0] > 0 ? 1 : 0;

  out.betti.resize(c.top_dim + 1);
  out.torsion.resize(c.top_dim + 1);
  for (int p = 0; p <= c.top_dim; ++p) {
    const long cycles = static_cast<long>(c.ranks[p]) -
                        (p == 0 ? aug_rank : rank_of_boundary[p]);
    out.betti[p] = cycles - rank_of_boundary[p + 1];
    out.torsion[p] = factors[p + 1];
    if (out.betti[p] < 0)
      throw internal_consistency_error("negative Betti number computed");
  }
  return out;
}

}  // namespace

HomologyResult reduced_homology(const ChainComplex& c,
                                const HomologyOptions& opts) {
  ensure_valid(c, opts);
  return homology_impl(c, /*reduced=*/true);
}

HomologyResult unreduced_homology(const ChainComplex& c,
                                  const HomologyOptions& opts) {
  ensure_valid(c, opts);
  return homology_impl(c, /*reduced=*/false);
}

std::vector<long> betti_numbers_field(const ChainComplex& c,
                                      std::uint32_t characteristic,
                                      const HomologyOptions& opts) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw malformed_input_error("characteristic must be 0 or a prime");
  ensure_valid(c, opts);
  if (c.empty()) return {};

  std::vector<long> rank_of_boundary(c.top_dim + 2, 0);
  for (int p = 1; p <= c.top_dim; ++p)
    rank_of_boundary[p] = rank_field(c.boundary[p], characteristic);

  std::vector<long> betti(c.top_dim + 1);
  for (int p = 0; p <= c.top_dim; ++p)
    betti[p] = static_cast<long>(c.ranks[p]) - rank_of_boundary[p] -
               rank_of_boundary[p + 1];
  return betti;
}

}  // namespace topohelly
