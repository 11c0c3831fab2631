#include "topohelly/spectral.hpp"

#include <algorithm>

#include "subfamily_walk.hpp"
#include "topohelly/chain.hpp"
#include "topohelly/errors.hpp"

namespace topohelly {

namespace {

// Rank of a rational matrix over Q or F_p after clearing denominators
// columnwise.
long rat_rank(const RatMatrix& m, std::uint32_t characteristic) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  IntMatrix cleared(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
      l = boost::multiprecision::lcm(l, Int(denominator(m(i, j))));
    for (std::size_t i = 0; i < m.rows(); ++i)
      cleared(i, j) =
          Int(numerator(m(i, j))) * (l / Int(denominator(m(i, j))));
  }
  return rank_field(cleared, characteristic);
}

}  // namespace

long SpectralPage::dim_at(int p, int q) const {
  if (p < 0 || q < 0 || p > max_p() || q > max_q()) return 0;
  return dims[p][q];
}

long SpectralPage::rank_out_of(int p, int q) const {
  const auto it = differentials.find({p, q});
  return it == differentials.end() ? 0 : rat_rank(it->second, characteristic);
}

long SpectralPage::rank_into(int p, int q) const {
  const auto source = filtration == Filtration::first
                          ? std::pair<int, int>{p + r, q - r + 1}
                          : std::pair<int, int>{p - r + 1, q + r};
  const auto it = differentials.find(source);
  return it == differentials.end() ? 0 : rat_rank(it->second, characteristic);
}

// ---- total complex ---------------------------------------------------------

namespace {

struct DegreeLayout {
  std::size_t dim = 0;
  std::vector<std::size_t> offsets;  // by p, with sentinel
};

DegreeLayout layout_degree(const DoubleComplex& dc, int n) {
  DegreeLayout out;
  out.offsets.assign(std::max(dc.max_p + 2, 1), 0);
  for (int p = 0; p <= dc.max_p; ++p) {
    out.offsets[p] = out.dim;
    out.dim += dc.rank_at(p, n - p);
  }
  out.offsets[dc.max_p + 1] = out.dim;
  return out;
}

SparseMatrix degree_differential(const DoubleComplex& dc,
                                 const DegreeLayout& target,
                                 const DegreeLayout& source, int n) {
  SparseMatrix d(target.dim, source.dim);
  for (int p = 0; p <= dc.max_p; ++p) {
    const int q = n - p;
    if (dc.rank_at(p, q) == 0) continue;
    if (const SparseMatrix* h = dc.horiz_at(p, q)) {
      for (std::size_t c = 0; c < h->cols; ++c)
        for (const auto& [row, sign] : h->entries[c])
          d.add(target.offsets[p - 1] + row, source.offsets[p] + c, sign);
    }
    if (const SparseMatrix* v = dc.vert_at(p, q)) {
      for (std::size_t c = 0; c < v->cols; ++c)
        for (const auto& [row, sign] : v->entries[c])
          d.add(target.offsets[p] + row, source.offsets[p] + c, sign);
    }
  }
  return d;
}

// Sparse check that consecutive total differentials compose to zero.
void check_total_square_zero(const std::vector<SparseMatrix>& d, int n) {
  const SparseMatrix& hi = d[n];      // Tot_n -> Tot_{n-1}
  const SparseMatrix& lo = d[n - 1];  // Tot_{n-1} -> Tot_{n-2}
  for (std::size_t c = 0; c < hi.cols; ++c) {
    std::map<std::uint32_t, int> acc;
    for (const auto& [mid, s1] : hi.entries[c])
      for (const auto& [row, s2] : lo.entries[mid]) acc[row] += s1 * s2;
    for (const auto& [row, v] : acc)
      if (v != 0)
        throw internal_consistency_error(
            "total differential does not square to zero (anticommutation "
            "violated)");
  }
}

}  // namespace

TotalComplex total_complex(const DoubleComplex& dc) {
  TotalComplex t;
  t.source = dc;
  if (dc.max_p < 0 || dc.max_q < 0) return t;
  t.max_degree = dc.max_p + dc.max_q;

  std::vector<DegreeLayout> layouts(t.max_degree + 1);
  for (int n = 0; n <= t.max_degree; ++n) layouts[n] = layout_degree(dc, n);

  t.dims.resize(t.max_degree + 1);
  t.differential.resize(t.max_degree + 1);
  t.first_offsets.resize(t.max_degree + 1);
  t.first_filtration_of_basis.resize(t.max_degree + 1);
  t.second_filtration_of_basis.resize(t.max_degree + 1);
  for (int n = 0; n <= t.max_degree; ++n) {
    t.dims[n] = layouts[n].dim;
    t.first_offsets[n] = layouts[n].offsets;
    t.differential[n] =
        n == 0 ? SparseMatrix(0, layouts[0].dim)
               : degree_differential(dc, layouts[n - 1], layouts[n], n);
    for (int p = 0; p <= dc.max_p; ++p)
      for (std::size_t i = layouts[n].offsets[p];
           i < layouts[n].offsets[p + 1]; ++i) {
        t.first_filtration_of_basis[n].push_back(p);
        t.second_filtration_of_basis[n].push_back(n - p);
      }
  }
  for (int n = 2; n <= t.max_degree; ++n)
    check_total_square_zero(t.differential, n);
  return t;
}

// ---- spectral sequence -----------------------------------------------------

SpectralSequence::SpectralSequence(const DoubleComplex& dc, Filtration f,
                                   std::uint32_t characteristic)
    : filtration_(f),
      char_(characteristic),
      dc_(f == Filtration::second ? dc.transposed() : dc) {
  if (char_ != 0 && !is_prime(char_))
    throw malformed_input_error("characteristic must be 0 or a prime");
  if (dc_.max_p < 0 || dc_.max_q < 0) return;
  max_degree_ = dc_.max_p + dc_.max_q;
  degrees_.resize(max_degree_ + 1);
  std::vector<DegreeLayout> layouts(max_degree_ + 1);
  for (int n = 0; n <= max_degree_; ++n) layouts[n] = layout_degree(dc_, n);
  for (int n = 0; n <= max_degree_; ++n) {
    degrees_[n].dim = layouts[n].dim;
    degrees_[n].offsets = layouts[n].offsets;
    degrees_[n].d =
        n == 0 ? SparseMatrix(0, layouts[0].dim)
               : degree_differential(dc_, layouts[n - 1], layouts[n], n);
  }
  d_rank_.assign(max_degree_ + 1, std::nullopt);
}

std::size_t SpectralSequence::prefix_cols(int n, int pmax) const {
  if (n < 0 || n > max_degree_ || pmax < 0) return 0;
  if (pmax > dc_.max_p) pmax = dc_.max_p;
  return degrees_[n].offsets[pmax + 1];
}

std::size_t SpectralSequence::row_start(int n, int pmin) const {
  if (n < 0 || n > max_degree_) return 0;
  if (pmin <= 0) return 0;
  if (pmin > dc_.max_p) return degrees_[n].dim;
  return degrees_[n].offsets[pmin];
}

// Z(n, colmax, rowmin) = F_colmax(Tot_n) intersected with the preimage under
// d of F_{rowmin - 1}(Tot_{n-1}); an integer basis embedded in Tot_n.
const IntMatrix& SpectralSequence::z_basis(int n, int colmax_p,
                                           int rowmin_p) {
  colmax_p = std::clamp(colmax_p, -1, dc_.max_p);
  rowmin_p = std::clamp(rowmin_p, 0, dc_.max_p + 1);
  const auto key = std::make_tuple(n, colmax_p, rowmin_p);
  const auto it = z_cache_.find(key);
  if (it != z_cache_.end()) return it->second;

  const std::size_t dim = (n >= 0 && n <= max_degree_) ? degrees_[n].dim : 0;
  const std::size_t cols = prefix_cols(n, colmax_p);
  IntMatrix out(dim, 0);
  if (cols > 0) {
    const std::size_t rstart = row_start(n - 1, rowmin_p);
    const std::size_t constraint_rows =
        n >= 1 ? degrees_[n - 1].dim - rstart : 0;
    if (constraint_rows == 0) {
      out = IntMatrix(dim, cols);
      for (std::size_t i = 0; i < cols; ++i) out(i, i) = 1;
    } else {
      const IntMatrix block = degrees_[n].d.corner(rstart, cols);
      const IntMatrix k = kernel_field(block, char_);
      out = IntMatrix(dim, k.cols());
      for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) out(i, j) = k(i, j);
    }
  }
  return z_cache_.emplace(key, std::move(out)).first->second;
}

// B(n, p, colmax_next) = F_p(Tot_n) intersected with the image under d of
// F_colmax_next(Tot_{n+1}); columns span the subspace (not necessarily
// independent).
const IntMatrix& SpectralSequence::b_basis(int n, int p, int colmax_next) {
  p = std::clamp(p, -1, dc_.max_p);
  colmax_next = std::clamp(colmax_next, -1, dc_.max_p);
  const auto key = std::make_tuple(n, p, colmax_next);
  const auto it = b_cache_.find(key);
  if (it != b_cache_.end()) return it->second;

  const std::size_t dim = (n >= 0 && n <= max_degree_) ? degrees_[n].dim : 0;
  IntMatrix out(dim, 0);
  const std::size_t cols_next = prefix_cols(n + 1, colmax_next);
  if (p >= 0 && n >= 0 && n < max_degree_ && cols_next > 0) {
    const SparseMatrix& d_next = degrees_[n + 1].d;
    const std::size_t rstart = row_start(n, p + 1);
    if (rstart >= dim) {
      out = d_next.corner(0, cols_next);
    } else {
      const IntMatrix block = d_next.corner(rstart, cols_next);
      const IntMatrix k = kernel_field(block, char_);
      out = d_next.apply_cols(k, cols_next);
    }
  }
  return b_cache_.emplace(key, std::move(out)).first->second;
}

long SpectralSequence::entry_dim(int r, int p, int q) {
  if (p < 0 || q < 0 || p > dc_.max_p || q > dc_.max_q) return 0;
  if (dc_.rank_at(p, q) == 0) return 0;
  const int n = p + q;
  const bool inf = r == kInfinityPage;
  const int rowmin = inf ? 0 : p - r + 1;
  const int bcol = inf ? dc_.max_p : p + r - 1;
  const IntMatrix& znum = z_basis(n, p, rowmin);
  if (znum.cols() == 0) return 0;
  const IntMatrix den =
      IntMatrix::hcat(z_basis(n, p - 1, rowmin), b_basis(n, p, bcol));
  const long den_rank =
      den.cols() == 0 ? 0 : rank_field(den, char_);
  return static_cast<long>(znum.cols()) - den_rank;
}

std::optional<RatMatrix> SpectralSequence::entry_differential(int r, int p,
                                                              int q) {
  // d^r : E^r_{p,q} -> E^r_{p-r, q+r-1}, induced by d on Z^r representatives.
  const int tp = p - r, tq = q + r - 1;
  const long source_dim = entry_dim(r, p, q);
  const long target_dim = entry_dim(r, tp, tq);
  if (source_dim == 0 || target_dim == 0) return std::nullopt;
  const int n = p + q;

  const IntMatrix& znum = z_basis(n, p, p - r + 1);
  const IntMatrix den =
      IntMatrix::hcat(z_basis(n, p - 1, p - r + 1), b_basis(n, p, p + r - 1));
  const std::vector<std::size_t> rep_idx = extending_columns(den, znum, char_);
  if (static_cast<long>(rep_idx.size()) != source_dim)
    throw internal_consistency_error("page representative count mismatch");
  const IntMatrix reps = znum.columns(rep_idx);
  const IntMatrix images = degrees_[n].d.apply(reps);

  const IntMatrix& tznum = z_basis(n - 1, tp, tp - r + 1);
  const IntMatrix tden = IntMatrix::hcat(z_basis(n - 1, tp - 1, tp - r + 1),
                                         b_basis(n - 1, tp, tp + r - 1));
  const std::vector<std::size_t> trep_idx =
      extending_columns(tden, tznum, char_);
  if (static_cast<long>(trep_idx.size()) != target_dim)
    throw internal_consistency_error("target representative count mismatch");
  const IntMatrix treps = tznum.columns(trep_idx);

  const auto solution =
      solve_linear(IntMatrix::hcat(tden, treps), images, char_);
  if (!solution)
    throw internal_consistency_error(
        "differential image escapes the target Z^r span");
  RatMatrix out(target_dim, source_dim);
  for (long i = 0; i < target_dim; ++i)
    for (long j = 0; j < source_dim; ++j)
      out(i, j) = (*solution)(tden.cols() + i, j);
  return out;
}

SpectralPage SpectralSequence::page(int r, bool with_differentials) {
  if (r != kInfinityPage && r < 1)
    throw malformed_input_error("page index must be >= 1");
  SpectralPage out;
  out.r = r;
  out.filtration = filtration_;
  out.characteristic = char_;
  if (dc_.max_p < 0) return out;

  // Working grid (transposed when computing the second filtration).
  std::vector<std::vector<long>> dims(dc_.max_p + 1,
                                      std::vector<long>(dc_.max_q + 1, 0));
  std::map<std::pair<int, int>, RatMatrix> diffs;
  for (int p = 0; p <= dc_.max_p; ++p)
    for (int q = 0; q <= dc_.max_q; ++q) {
      dims[p][q] = entry_dim(r, p, q);
      if (with_differentials && r != kInfinityPage && dims[p][q] > 0) {
        if (auto d = entry_differential(r, p, q)) diffs[{p, q}] = std::move(*d);
      }
    }

  if (filtration_ == Filtration::first) {
    out.dims = std::move(dims);
    out.differentials = std::move(diffs);
  } else {
    out.dims.assign(dc_.max_q + 1, std::vector<long>(dc_.max_p + 1, 0));
    for (int p = 0; p <= dc_.max_p; ++p)
      for (int q = 0; q <= dc_.max_q; ++q) out.dims[q][p] = dims[p][q];
    for (auto& [pq, m] : diffs)
      out.differentials[{pq.second, pq.first}] = std::move(m);
  }
  return out;
}

long SpectralSequence::total_homology_dim(int n) {
  if (n < 0 || n > max_degree_) return 0;
  const auto rank_of = [&](int m) -> long {
    if (m < 1 || m > max_degree_) return 0;
    if (!d_rank_[m])
      d_rank_[m] = rank_field(
          degrees_[m].d.corner(0, degrees_[m].d.cols), char_);
    return *d_rank_[m];
  };
  return static_cast<long>(degrees_[n].dim) - rank_of(n) - rank_of(n + 1);
}

int SpectralSequence::stabilization_page() const {
  return std::max(dc_.max_p, 0) + std::max(dc_.max_q, 0) + 2;
}

SpectralPage spectral_page(const TotalComplex& t, Filtration f, int r,
                           std::uint32_t characteristic) {
  SpectralSequence seq(t.source, f, characteristic);
  return seq.page(r);
}

// ---- theorem checks --------------------------------------------------------

namespace {

template <class ComplexT>
std::vector<long> field_betti_of(const ComplexT& k,
                                 std::uint32_t characteristic) {
  return betti_numbers_field(chain_complex(k), characteristic,
                             {.check_boundary = false});
}

long betti_at(const std::vector<long>& b, int n) {
  return (n >= 0 && n < static_cast<int>(b.size())) ? b[n] : 0;
}

}  // namespace

template <class ComplexT>
SpectralVerificationReport spectral_verification(
    const SetFamily<ComplexT>& family, int k, std::uint32_t characteristic,
    const Caps& caps) {
  SpectralVerificationReport out;
  E2IdentityReport& claims = out.claims;
  ConvergenceReport& conv = out.convergence;
  claims.k = conv.k = k;
  claims.characteristic = conv.characteristic = characteristic;

  const DoubleComplex dc = mayer_vietoris_double_complex(family, caps);
  SpectralSequence first(dc, Filtration::first, characteristic);
  SpectralSequence second(dc, Filtration::second, characteristic);
  claims.e2_first = first.page(2, /*with_differentials=*/false);
  claims.e2_second = second.page(2, /*with_differentials=*/false);
  const SpectralPage einf_first = first.page(kInfinityPage);
  const SpectralPage einf_second = second.page(kInfinityPage);

  const std::vector<long> bu =
      field_betti_of(family_union(family), characteristic);
  const std::vector<long> bn =
      field_betti_of(nerve(family, caps).complex, characteristic);

  // Claim (i): column q = 0 carries the union's homology, everything else
  // vanishes.
  claims.union_column_ok = true;
  for (int p = 0; p <= std::max(claims.e2_first.max_p(),
                                static_cast<int>(bu.size()) - 1);
       ++p)
    for (int q = 0; q <= claims.e2_first.max_q(); ++q) {
      const long expected = q == 0 ? betti_at(bu, p) : 0;
      const long got = claims.e2_first.dim_at(p, q);
      if (got != expected) {
        claims.union_column_ok = false;
        claims.union_column_mismatches.push_back({p, q, got, expected});
      }
    }

  // Claim (ii): zero at p >= 1 on and above the (k-1)-th anti-diagonal; row
  // p = 0 carries the nerve's homology in degrees q >= k.
  claims.nerve_row_ok = true;
  const int qtop = std::max(claims.e2_second.max_q(),
                            static_cast<int>(bn.size()) - 1);
  for (int p = 1; p <= claims.e2_second.max_p(); ++p)
    for (int q = 0; q <= claims.e2_second.max_q(); ++q) {
      if (p + q < k - 1) continue;
      const long got = claims.e2_second.dim_at(p, q);
      if (got != 0) {
        claims.nerve_row_ok = false;
        claims.nerve_row_mismatches.push_back({p, q, got, 0});
      }
    }
  for (int q = k; q <= qtop; ++q) {
    const long got = claims.e2_second.dim_at(0, q);
    const long expected = betti_at(bn, q);
    if (got != expected) {
      claims.nerve_row_ok = false;
      claims.nerve_row_mismatches.push_back({0, q, got, expected});
    }
  }

  // Convergence of both filtrations to H(Tot), and the union/nerve identity
  // in degrees >= k.
  const int top = std::max({first.max_total_degree(),
                            static_cast<int>(bu.size()) - 1,
                            static_cast<int>(bn.size()) - 1, k});
  conv.convergence_ok = true;
  conv.union_matches_tot = true;
  conv.nerve_identity_ok = true;
  for (int n = 0; n <= top; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.h_total = first.total_homology_dim(n);
    for (int p = 0; p <= n; ++p) {
      row.sum_einf_first += einf_first.dim_at(p, n - p);
      row.sum_einf_second += einf_second.dim_at(p, n - p);
    }
    row.betti_union = betti_at(bu, n);
    row.betti_nerve = betti_at(bn, n);
    if (row.h_total != row.sum_einf_first ||
        row.h_total != row.sum_einf_second)
      conv.convergence_ok = false;
    if (row.betti_union != row.h_total) conv.union_matches_tot = false;
    if (n >= k && row.betti_union != row.betti_nerve)
      conv.nerve_identity_ok = false;
    conv.rows.push_back(row);
  }
  return out;
}

template <class ComplexT>
E2IdentityReport e2_identity_check(const SetFamily<ComplexT>& family,
                                           int k, std::uint32_t characteristic,
                                           const Caps& caps) {
  return spectral_verification(family, k, characteristic, caps).claims;
}

template <class ComplexT>
ConvergenceReport convergence_check(const SetFamily<ComplexT>& family, int k,
                                    std::uint32_t characteristic,
                                    const Caps& caps) {
  return spectral_verification(family, k, characteristic, caps).convergence;
}

template <class ComplexT>
NerveTheoremReport nerve_theorem_check(const SetFamily<ComplexT>& family,
                                       int k, const Caps& caps) {
  if (k < 0) throw malformed_input_error("k must be non-negative");
  NerveTheoremReport out;
  out.k = k;
  out.hypothesis_ok = true;

  detail::walk_nonempty_intersections(
      family, caps, -1, [&](const std::vector<int>& j, const ComplexT& inter) {
        const int level = k - static_cast<int>(j.size()) + 1;
        if (level < 0) return true;  // non-empty is all that is required
        const HomologyResult h =
            reduced_homology(chain_complex(inter), {.check_boundary = false});
        for (int n = 0; n <= level; ++n) {
          const bool nonzero =
              h.betti_at(n) != 0 || (n < static_cast<int>(h.torsion.size()) &&
                                     !h.torsion[n].empty());
          if (nonzero) {
            out.hypothesis_ok = false;
            out.hypothesis_violation = AcyclicityViolation{
                j, n, h.betti_at(n),
                n < static_cast<int>(h.torsion.size()) ? h.torsion[n]
                                                       : std::vector<Int>{}};
            return false;
          }
        }
        return true;
      });
  if (!out.hypothesis_ok) return out;

  const HomologyResult hu = unreduced_homology(
      chain_complex(family_union(family)), {.check_boundary = false});
  const HomologyResult hn = unreduced_homology(
      chain_complex(nerve(family, caps).complex), {.check_boundary = false});
  out.verdict = true;
  for (int n = 0; n <= k; ++n) {
    const long u = hu.empty_space ? 0 : hu.betti_at(n);
    const long v = hn.empty_space ? 0 : hn.betti_at(n);
    out.betti_pairs.emplace_back(u, v);
    if (u != v) out.verdict = false;
  }
  return out;
}

template SpectralVerificationReport spectral_verification(
    const SimplicialFamily&, int, std::uint32_t, const Caps&);
template SpectralVerificationReport spectral_verification(const CubicalFamily&,
                                                          int, std::uint32_t,
                                                          const Caps&);
template E2IdentityReport e2_identity_check(const SimplicialFamily&,
                                                    int, std::uint32_t,
                                                    const Caps&);
template E2IdentityReport e2_identity_check(const CubicalFamily&, int,
                                                    std::uint32_t,
                                                    const Caps&);
template ConvergenceReport convergence_check(const SimplicialFamily&, int,
                                             std::uint32_t, const Caps&);
template ConvergenceReport convergence_check(const CubicalFamily&, int,
                                             std::uint32_t, const Caps&);
template NerveTheoremReport nerve_theorem_check(const SimplicialFamily&, int,
                                                const Caps&);
template NerveTheoremReport nerve_theorem_check(const CubicalFamily&, int,
                                                const Caps&);

}  // namespace topohelly
