#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topohelly/caps.hpp"
#include "topohelly/family.hpp"
#include "topohelly/homology.hpp"

namespace topohelly {

/// Nerve of a set family: a simplicial complex on the member indices
/// (0-based) whose faces are the subfamilies with non-empty intersection.
/// `witness` maps each face to one cell of the common intersection; the full
/// intersection is recoverable from the family.
struct NerveComplex {
  SimplicialComplex complex;
  std::vector<std::string> member_names;
  std::map<Simplex, std::string, SimplexLess> witness;
};

template <class ComplexT>
NerveComplex nerve(const SetFamily<ComplexT>& family, const Caps& caps = {});

struct AcyclicityViolation {
  std::vector<int> subfamily;  // member indices, 0-based
  int dimension;               // offending homology dimension n
  long betti;
  std::vector<Int> torsion;
};

/// Verdict of the (k-|G|)-acyclicity test: true iff for every subfamily G
/// the intersection is empty or has vanishing reduced homology in all
/// dimensions >= k - |G|.  Violations re-verify by recomputation.
struct AcyclicityReport {
  int k = 0;
  bool verdict = false;
  std::vector<AcyclicityViolation> violations;
  std::size_t subfamilies_checked = 0;
};

template <class ComplexT>
AcyclicityReport is_k_acyclic_family(const SetFamily<ComplexT>& family, int k,
                                     const Caps& caps = {});

/// Homological proxy for the good-cover property: every non-empty
/// intersection is Z-acyclic.
struct GoodCoverResult {
  bool good = false;
  std::optional<AcyclicityViolation> witness;
  std::size_t subfamilies_checked = 0;
};

template <class ComplexT>
GoodCoverResult is_good_cover_homological(const SetFamily<ComplexT>& family,
                                          const Caps& caps = {});

struct LerayWitness {
  std::vector<VertexId> vertex_set;  // induced subcomplex with the top hole
  int dimension;                     // its highest non-vanishing dimension
};

/// Smallest d >= 0 such that every induced subcomplex has vanishing reduced
/// homology in all dimensions >= d (exhaustive over the 2^V vertex subsets).
struct LerayResult {
  int leray = 0;
  std::optional<LerayWitness> worst;
  std::size_t subcomplexes_checked = 0;
};

LerayResult leray_number(const SimplicialComplex& k, const Caps& caps = {});

/// Marker for "reduced homology vanishes in every dimension".
inline constexpr int kFullyAcyclic = std::numeric_limits<int>::max();

/// Largest c with vanishing reduced homology in all dimensions <= c, i.e.
/// the homological stand-in for c-connectedness: -1 means non-empty but
/// disconnected, kFullyAcyclic means acyclic in every dimension.  Throws
/// empty_space_error on the empty complex.
template <class ComplexT>
int homological_connectivity(const ComplexT& c);

}  // namespace topohelly
