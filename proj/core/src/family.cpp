#include "topohelly/family.hpp"

namespace topohelly {

namespace {

template <class ComplexT>
void check_indices(const SetFamily<ComplexT>& family,
                   const std::vector<int>& j) {
  if (j.empty())
    throw malformed_input_error("index set must be non-empty");
  for (int i : j)
    if (i < 0 || i >= family.size())
      throw malformed_input_error("member index out of range: " +
                                  std::to_string(i));
}

}  // namespace

template <class ComplexT>
ComplexT intersect_members(const SetFamily<ComplexT>& family,
                           const std::vector<int>& j) {
  check_indices(family, j);
  ComplexT acc = family.members[j[0]];
  for (std::size_t t = 1; t < j.size(); ++t)
    acc = ComplexT::intersection(acc, family.members[j[t]]);
  return acc;
}

template <class ComplexT>
ComplexT unite_members(const SetFamily<ComplexT>& family,
                       const std::vector<int>& j) {
  check_indices(family, j);
  ComplexT acc = family.members[j[0]];
  for (std::size_t t = 1; t < j.size(); ++t)
    acc = ComplexT::unite(acc, family.members[j[t]]);
  return acc;
}

template <class ComplexT>
ComplexT family_union(const SetFamily<ComplexT>& family) {
  if (family.size() == 0) {
    if constexpr (std::is_same_v<ComplexT, CubicalComplex>)
      return CubicalComplex(family.ambient.ambient_dim());
    else
      return ComplexT{};
  }
  std::vector<int> all(family.size());
  for (int i = 0; i < family.size(); ++i) all[i] = i;
  return unite_members(family, all);
}

int family_size(const AnyFamily& family) {
  return std::visit([](const auto& f) { return f.size(); }, family);
}

template SimplicialComplex intersect_members(const SimplicialFamily&,
                                             const std::vector<int>&);
template CubicalComplex intersect_members(const CubicalFamily&,
                                          const std::vector<int>&);
template SimplicialComplex unite_members(const SimplicialFamily&,
                                         const std::vector<int>&);
template CubicalComplex unite_members(const CubicalFamily&,
                                      const std::vector<int>&);
template SimplicialComplex family_union(const SimplicialFamily&);
template CubicalComplex family_union(const CubicalFamily&);

}  // namespace topohelly
