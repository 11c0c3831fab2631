#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "topohelly/double_complex.hpp"
#include "topohelly/nerve.hpp"

namespace topohelly {

enum class Filtration { first, second };

/// Page index marker for E^infinity.
inline constexpr int kInfinityPage = std::numeric_limits<int>::max();

/// One page of a spectral sequence.  Dimensions are indexed by the double
/// complex's own bidegrees for both filtrations (the second filtration is
/// computed on the transpose and mapped back), so claim (i) reads off the
/// first-filtration page and claim (ii) off the second.
struct SpectralPage {
  int r = 1;
  Filtration filtration = Filtration::first;
  std::uint32_t characteristic = 0;
  std::vector<std::vector<long>> dims;  // [p][q]
  /// d^r on chosen representatives, keyed by source (p,q).  For the first
  /// filtration d^r maps (p,q) -> (p-r, q+r-1); for the second, mapped back
  /// to the original indexing, it maps (p,q) -> (p+r-1, q-r).
  std::map<std::pair<int, int>, RatMatrix> differentials;

  long dim_at(int p, int q) const;
  long rank_out_of(int p, int q) const;
  long rank_into(int p, int q) const;
  int max_p() const { return static_cast<int>(dims.size()) - 1; }
  int max_q() const {
    return dims.empty() ? -1 : static_cast<int>(dims[0].size()) - 1;
  }
};

/// Total complex of a double complex: one module per anti-diagonal with the
/// summed differential, plus the two filtrations as basis-index partitions.
struct TotalComplex {
  DoubleComplex source;
  int max_degree = -1;
  std::vector<std::size_t> dims;           // per n
  std::vector<SparseMatrix> differential;  // d[n] : Tot_n -> Tot_{n-1}
  /// Basis of Tot_n is ordered by ascending p; first_offsets[n][p] is the
  /// start of the p-block, with a final sentinel equal to dims[n].  The
  /// second filtration is the same data on the transposed double complex.
  std::vector<std::vector<std::size_t>> first_offsets;
  std::vector<std::vector<int>> first_filtration_of_basis;   // p per element
  std::vector<std::vector<int>> second_filtration_of_basis;  // q per element
};

/// Builds the total complex; throws internal_consistency_error when the
/// double complex fails d@d = 0 for the summed differential.
TotalComplex total_complex(const DoubleComplex& dc);

/// Exact spectral-sequence calculator from the Z^r/B^r tower of the chosen
/// filtration, over Q (characteristic 0) or F_p.  Pages are quotients of
/// subspaces of the total complex computed by exact linear algebra.
class SpectralSequence {
 public:
  SpectralSequence(const DoubleComplex& dc, Filtration f,
                   std::uint32_t characteristic);

  /// r >= 1, or kInfinityPage for the stable page.  Pass false to skip the
  /// representative solves when only dimensions are needed.
  SpectralPage page(int r, bool with_differentials = true);

  long total_homology_dim(int n);
  int max_total_degree() const { return max_degree_; }
  /// Every page with r >= this value equals the infinity page.
  int stabilization_page() const;

 private:
  struct Degree {
    std::size_t dim = 0;
    SparseMatrix d;                    // into degree n-1
    std::vector<std::size_t> offsets;  // block starts by p, sentinel last
  };

  std::size_t prefix_cols(int n, int pmax) const;
  std::size_t row_start(int n, int pmin) const;
  const IntMatrix& z_basis(int n, int colmax_p, int rowmin_p);
  const IntMatrix& b_basis(int n, int p, int colmax_next);
  long entry_dim(int r, int p, int q);
  std::optional<RatMatrix> entry_differential(int r, int p, int q);

  Filtration filtration_;
  std::uint32_t char_;
  DoubleComplex dc_;  // transposed copy when filtration == second
  int max_degree_ = -1;
  std::vector<Degree> degrees_;
  std::map<std::tuple<int, int, int>, IntMatrix> z_cache_;
  std::map<std::tuple<int, int, int>, IntMatrix> b_cache_;
  std::vector<std::optional<long>> d_rank_;
};

SpectralPage spectral_page(const TotalComplex& t, Filtration f, int r,
                           std::uint32_t characteristic);

// ---- theorem-level checks -------------------------------------------------

struct ClaimMismatch {
  int p, q;
  long got, expected;
};

/// Claim (i): first-filtration E^2 is the union's homology in column q = 0
/// and zero elsewhere.  Claim (ii): second-filtration E^2 vanishes at p >= 1
/// on and above the (k-1)-th anti-diagonal, and row p = 0 carries the nerve's
/// homology in degrees q >= k.
struct E2IdentityReport {
  int k = 0;
  std::uint32_t characteristic = 0;
  bool union_column_ok = false;
  bool nerve_row_ok = false;
  std::vector<ClaimMismatch> union_column_mismatches;
  std::vector<ClaimMismatch> nerve_row_mismatches;
  SpectralPage e2_first;
  SpectralPage e2_second;
};

template <class ComplexT>
E2IdentityReport e2_identity_check(const SetFamily<ComplexT>& family,
                                           int k, std::uint32_t characteristic,
                                           const Caps& caps = {});

struct SpectralVerificationReport;  // claims + convergence in one pass

struct ConvergenceRow {
  int n = 0;
  long h_total = 0;
  long sum_einf_first = 0;
  long sum_einf_second = 0;
  long betti_union = 0;
  long betti_nerve = 0;
};

/// Convergence of both filtrations to H(Tot) plus the homology identity
/// between the union and the nerve in degrees >= k.
struct ConvergenceReport {
  int k = 0;
  std::uint32_t characteristic = 0;
  std::vector<ConvergenceRow> rows;
  bool convergence_ok = false;     // h_total == both E^inf sums, every n
  bool union_matches_tot = false;  // betti_union == h_total, every n
  bool nerve_identity_ok = false;  // betti_union == betti_nerve for n >= k
};

template <class ComplexT>
ConvergenceReport convergence_check(const SetFamily<ComplexT>& family, int k,
                                    std::uint32_t characteristic,
                                    const Caps& caps = {});

/// One shared pass for the E^2 claims and the convergence identities (the
/// two checks reuse the same double complex and subspace caches).
struct SpectralVerificationReport {
  E2IdentityReport claims;
  ConvergenceReport convergence;
};

template <class ComplexT>
SpectralVerificationReport spectral_verification(
    const SetFamily<ComplexT>& family, int k, std::uint32_t characteristic,
    const Caps& caps = {});

/// Homology nerve theorem: under the connectivity proxy (every non-empty
/// intersection of a subfamily G has vanishing reduced homology through
/// dimension k-|G|+1), the union and the nerve share Betti numbers up to k.
struct NerveTheoremReport {
  int k = 0;
  bool hypothesis_ok = false;
  std::optional<AcyclicityViolation> hypothesis_violation;
  bool verdict = false;
  std::vector<std::pair<long, long>> betti_pairs;  // n = 0..k: union, nerve
};

template <class ComplexT>
NerveTheoremReport nerve_theorem_check(const SetFamily<ComplexT>& family,
                                       int k, const Caps& caps = {});

}  // namespace topohelly
