#pragma once

#include <string>
#include <variant>
#include <vector>

#include "topohelly/cubical.hpp"
#include "topohelly/errors.hpp"
#include "topohelly/simplicial.hpp"

namespace topohelly {

/// Named subcomplexes F_1, ..., F_n of one ambient complex.
template <class ComplexT>
struct SetFamily {
  ComplexT ambient;
  std::vector<std::string> names;
  std::vector<ComplexT> members;

  int size() const { return static_cast<int>(members.size()); }

  void validate() const {
    if (names.size() != members.size())
      throw malformed_input_error("family names/members length mismatch");
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw malformed_input_error("duplicate member name: " + names[i]);
      if (!members[i].is_subcomplex_of(ambient))
        throw malformed_input_error("member " + names[i] +
                                    " is not a subcomplex of the ambient");
    }
  }
};

using SimplicialFamily = SetFamily<SimplicialComplex>;
using CubicalFamily = SetFamily<CubicalComplex>;
using AnyFamily = std::variant<SimplicialFamily, CubicalFamily>;

/// Intersection of the members indexed by J (0-based).  J must be non-empty;
/// the empty-J convention is the caller's business.
template <class ComplexT>
ComplexT intersect_members(const SetFamily<ComplexT>& family,
                           const std::vector<int>& j);

/// Union of the members indexed by J.
template <class ComplexT>
ComplexT unite_members(const SetFamily<ComplexT>& family,
                       const std::vector<int>& j);

/// Union of all members.
template <class ComplexT>
ComplexT family_union(const SetFamily<ComplexT>& family);

int family_size(const AnyFamily& family);

}  // namespace topohelly
