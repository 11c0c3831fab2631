#include <doctest.h>

#include "topohelly/errors.hpp"
#include "topohelly/generators.hpp"
#include "topohelly/spectral.hpp"

using namespace topohelly;

namespace {

CubicalFamily two_intervals() {
  // Two overlapping intervals on a line grid.
  const std::vector<int> extent = {6};
  CubicalFamily f;
  f.ambient = full_grid(extent);
  f.names = {"F1", "F2"};
  f.members = {grid_box({0}, {3}, extent), grid_box({2}, {3}, extent)};
  return f;
}

CubicalFamily two_boxes() {
  const std::vector<int> extent = {4, 4};
  CubicalFamily f;
  f.ambient = full_grid(extent);
  f.names = {"F1", "F2"};
  f.members = {grid_box({0, 0}, {2, 2}, extent), grid_box({1, 1}, {2, 2}, extent)};
  return f;
}

CubicalFamily concentric_rings(int n) {
  const std::vector<int> extent = {14, 14};
  CubicalFamily f;
  f.ambient = full_grid(extent);
  for (int i = 0; i < n; ++i) {
    f.names.push_back("F" + std::to_string(i + 1));
    f.members.push_back(discretize_annulus({7, 7}, 1 + i, 6, extent));
  }
  return f;
}

long rank_of_block(const DoubleComplex& dc, const SparseMatrix* m,
                   std::uint32_t ch) {
  if (!m) return 0;
  return rank_field(m->dense(), ch);
}

// Blockwise homology of the columns (vertical differential): the
// independent route to the first-filtration E^1.
long e1_first_oracle(const DoubleComplex& dc, int p, int q, std::uint32_t ch) {
  const long r = static_cast<long>(dc.rank_at(p, q));
  if (r == 0) return 0;
  return r - rank_of_block(dc, dc.vert_at(p, q), ch) -
         rank_of_block(dc, dc.vert_at(p, q + 1), ch);
}

long e1_second_oracle(const DoubleComplex& dc, int p, int q, std::uint32_t ch) {
  const long r = static_cast<long>(dc.rank_at(p, q));
  if (r == 0) return 0;
  return r - rank_of_block(dc, dc.horiz_at(p, q), ch) -
         rank_of_block(dc, dc.horiz_at(p + 1, q), ch);
}

}  // namespace

TEST_CASE("mayer-vietoris double complex of two intervals") {
  const CubicalFamily f = two_intervals();
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  REQUIRE(dc.max_q == 1);
  REQUIRE(dc.max_p == 1);
  // Row q = 0: chains of F1 + F2 (4 + 4 vertices, 3 + 3 edges).
  CHECK(dc.rank_at(0, 0) == 8);
  CHECK(dc.rank_at(1, 0) == 6);
  // Row q = 1: chains of the overlap [2,3] (2 vertices, 1 edge).
  CHECK(dc.rank_at(0, 1) == 2);
  CHECK(dc.rank_at(1, 1) == 1);
  CHECK(dc.identities_hold());
}

TEST_CASE("disjoint members have no higher rows") {
  const std::vector<int> extent = {8};
  CubicalFamily f;
  f.ambient = full_grid(extent);
  f.names = {"F1", "F2"};
  f.members = {grid_box({0}, {2}, extent), grid_box({5}, {2}, extent)};
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  CHECK(dc.max_q == 0);
}

TEST_CASE("triple intersection contributes to q = 2") {
  CubicalFamily f;
  const std::vector<int> extent = {6, 6};
  f.ambient = full_grid(extent);
  f.names = {"A", "B", "C"};
  f.members = {grid_box({0, 0}, {3, 3}, extent), grid_box({2, 2}, {3, 3}, extent),
               grid_box({2, 0}, {3, 3}, extent)};
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  CHECK(dc.rank_at(0, 2) >= 1);
  CHECK(dc.identities_hold());
}

TEST_CASE("total complex of handmade double complexes") {
  DoubleComplex zero;
  const TotalComplex tz = total_complex(zero);
  CHECK(tz.max_degree == -1);

  DoubleComplex unit;
  unit.max_p = 0;
  unit.max_q = 0;
  unit.ranks = {{1}};
  unit.labels = {{{"c"}}};
  const TotalComplex tu = total_complex(unit);
  REQUIRE(tu.max_degree == 0);
  CHECK(tu.dims[0] == 1);
  SpectralSequence seq(unit, Filtration::first, 0);
  CHECK(seq.total_homology_dim(0) == 1);
}

TEST_CASE("total complex of the MV complex matches the union's homology") {
  const CubicalFamily f = two_intervals();
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  const TotalComplex t = total_complex(dc);
  CHECK(t.max_degree == 2);
  // Filtration indices partition each degree.
  for (int n = 0; n <= t.max_degree; ++n) {
    REQUIRE(t.first_filtration_of_basis[n].size() == t.dims[n]);
    for (std::size_t i = 0; i + 1 < t.dims[n]; ++i)
      CHECK(t.first_filtration_of_basis[n][i] <=
            t.first_filtration_of_basis[n][i + 1]);
  }
  SpectralSequence seq(dc, Filtration::first, 0);
  CHECK(seq.total_homology_dim(0) == 1);  // union is an interval
  CHECK(seq.total_homology_dim(1) == 0);
  CHECK(seq.total_homology_dim(2) == 0);
}

TEST_CASE("anticommutation violations are rejected") {
  const CubicalFamily f = two_intervals();
  DoubleComplex dc = mayer_vietoris_double_complex(f);
  REQUIRE(dc.identities_hold());
  // Flip one sign of the inclusion differential.
  auto& entries = dc.vert.at({1, 1}).entries;
  REQUIRE(!entries.empty());
  REQUIRE(!entries[0].empty());
  entries[0][0].second = -entries[0][0].second;
  CHECK_FALSE(dc.identities_hold());
  CHECK_THROWS_AS(total_complex(dc), internal_consistency_error);
}

TEST_CASE("E^1 via the filtration formulas equals blockwise homology") {
  for (std::uint32_t ch : {0u, 2u, 5u}) {
    for (const CubicalFamily& f :
         {two_intervals(), two_boxes(), concentric_rings(3)}) {
      const DoubleComplex dc = mayer_vietoris_double_complex(f);
      SpectralSequence first(dc, Filtration::first, ch);
      SpectralSequence second(dc, Filtration::second, ch);
      const SpectralPage e1f = first.page(1, false);
      const SpectralPage e1s = second.page(1, false);
      for (int p = 0; p <= dc.max_p; ++p)
        for (int q = 0; q <= dc.max_q; ++q) {
          CHECK(e1f.dim_at(p, q) == e1_first_oracle(dc, p, q, ch));
          CHECK(e1s.dim_at(p, q) == e1_second_oracle(dc, p, q, ch));
        }
    }
  }
}

TEST_CASE("page recurrence: E^{r+1} is the homology of (E^r, d^r)") {
  const CubicalFamily f = two_boxes();
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  for (const Filtration filt : {Filtration::first, Filtration::second}) {
    SpectralSequence seq(dc, filt, 0);
    for (int r = 1; r <= 3; ++r) {
      const SpectralPage page = seq.page(r);
      const SpectralPage next = seq.page(r + 1, false);
      for (int p = 0; p <= page.max_p(); ++p)
        for (int q = 0; q <= page.max_q(); ++q) {
          const long expected = page.dim_at(p, q) - page.rank_out_of(p, q) -
                                page.rank_into(p, q);
          CHECK(next.dim_at(p, q) == expected);
        }
    }
  }
}

TEST_CASE("pages collapse to the infinity page") {
  const CubicalFamily f = concentric_rings(2);
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  for (const Filtration filt : {Filtration::first, Filtration::second}) {
    SpectralSequence seq(dc, filt, 0);
    const SpectralPage stable = seq.page(seq.stabilization_page(), false);
    const SpectralPage later = seq.page(seq.stabilization_page() + 2, false);
    const SpectralPage inf = seq.page(kInfinityPage);
    CHECK(stable.dims == inf.dims);
    CHECK(later.dims == inf.dims);
  }
}

TEST_CASE("claims on a two-box good cover (the E^2 picture)") {
  const E2IdentityReport r = e2_identity_check(two_boxes(), 0, 0);
  CHECK(r.union_column_ok);
  CHECK(r.nerve_row_ok);
  CHECK(r.e2_first.dim_at(0, 0) == 1);
  long total = 0;
  for (const auto& row : r.e2_first.dims)
    for (long v : row) total += v;
  CHECK(total == 1);
}

TEST_CASE("claim (ii) fails for a lone annulus at k = 1") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::adversarial;
  spec.pattern = "annulus-solo";
  const auto family = std::get<CubicalFamily>(generate(spec));
  const E2IdentityReport r = e2_identity_check(family, 1, 0);
  CHECK(r.union_column_ok);  // claim (i) needs no hypothesis
  CHECK_FALSE(r.nerve_row_ok);
  REQUIRE(!r.nerve_row_mismatches.empty());
  CHECK(r.nerve_row_mismatches[0].p == 1);
  CHECK(r.nerve_row_mismatches[0].q == 0);
}

TEST_CASE("claims hold for the concentric family at its acyclicity level") {
  const CubicalFamily f = concentric_rings(3);
  REQUIRE(is_k_acyclic_family(f, 5).verdict);
  const E2IdentityReport r = e2_identity_check(f, 5, 0);
  CHECK(r.union_column_ok);
  CHECK(r.nerve_row_ok);
}

TEST_CASE("convergence and the union/nerve identity") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::adversarial;
  spec.pattern = "offset-annuli";
  const auto family = std::get<CubicalFamily>(generate(spec));
  REQUIRE(is_k_acyclic_family(family, 3).verdict);

  const ConvergenceReport r = convergence_check(family, 3, 0);
  CHECK(r.convergence_ok);
  CHECK(r.union_matches_tot);
  CHECK(r.nerve_identity_ok);
  for (const auto& row : r.rows)
    if (row.n >= 3) {
      CHECK(row.betti_union == 0);
      CHECK(row.betti_nerve == 0);
    }
}

TEST_CASE("single-member family collapses everything") {
  const std::vector<int> extent = {8, 8};
  CubicalFamily f;
  f.ambient = full_grid(extent);
  f.names = {"F1"};
  f.members = {discretize_annulus({4, 4}, 1, 3, extent)};
  const ConvergenceReport r = convergence_check(f, 0, 0);
  CHECK(r.convergence_ok);
  CHECK(r.union_matches_tot);
  REQUIRE(r.rows.size() >= 2);
  CHECK(r.rows[0].h_total == 1);
  CHECK(r.rows[1].h_total == 1);
  CHECK(r.rows[0].betti_nerve == 1);  // the nerve is a point
  CHECK(r.rows[1].betti_nerve == 0);
}

TEST_CASE("extension problem is trivial when one end survives") {
  const CubicalFamily f = concentric_rings(3);
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  SpectralSequence seq(dc, Filtration::first, 0);
  const SpectralPage inf = seq.page(kInfinityPage);
  for (int n = 0; n <= seq.max_total_degree(); ++n) {
    long middle = 0;
    for (int p = 1; p < n; ++p) middle += inf.dim_at(p, n - p);
    const long left = inf.dim_at(n, 0);
    const long right = n == 0 ? 0 : inf.dim_at(0, n);
    if (middle == 0 && (left == 0) != (right == 0))
      CHECK(seq.total_homology_dim(n) == left + right);
  }
}

TEST_CASE("convergence over a prime field") {
  const ConvergenceReport r = convergence_check(two_boxes(), 0, 2);
  CHECK(r.convergence_ok);
  CHECK(r.union_matches_tot);
  CHECK(r.nerve_identity_ok);
}

TEST_CASE("spectral_page free function works off a total complex") {
  const DoubleComplex dc = mayer_vietoris_double_complex(two_intervals());
  const TotalComplex t = total_complex(dc);
  const SpectralPage e2 = spectral_page(t, Filtration::first, 2, 0);
  CHECK(e2.dim_at(0, 0) == 1);
}

TEST_CASE("nerve theorem check: pass, fail hypothesis") {
  // Good cover: hypothesis vacuous at every level, equality everywhere.
  const NerveTheoremReport good = nerve_theorem_check(two_boxes(), 2);
  CHECK(good.hypothesis_ok);
  CHECK(good.verdict);

  // Two contractible sets with connected non-empty intersection, k = 1.
  const NerveTheoremReport pair = nerve_theorem_check(two_boxes(), 1);
  CHECK(pair.hypothesis_ok);
  CHECK(pair.verdict);
  REQUIRE(pair.betti_pairs.size() == 2);
  CHECK(pair.betti_pairs[0] == std::pair<long, long>{1, 1});
  CHECK(pair.betti_pairs[1] == std::pair<long, long>{0, 0});

  // Disconnected intersection violates the connectivity hypothesis at k = 1.
  GeneratorSpec spec;
  spec.kind = GeneratorKind::adversarial;
  spec.pattern = "disconnected-intersection";
  const auto family = std::get<CubicalFamily>(generate(spec));
  const NerveTheoremReport bad = nerve_theorem_check(family, 1);
  CHECK_FALSE(bad.hypothesis_ok);
  REQUIRE(bad.hypothesis_violation.has_value());
  CHECK(bad.hypothesis_violation->subfamily == std::vector<int>{0, 1});
}
