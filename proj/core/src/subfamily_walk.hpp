#pragma once

// Internal: depth-first walk of the subfamilies with non-empty intersection.
// Subfamilies form a simplicial complex (the nerve), so extending sorted
// index sets by larger indices and short-circuiting on empty intersections
// visits each exactly once and skips every superset of an empty one.

#include <functional>
#include <vector>

#include "topohelly/caps.hpp"
#include "topohelly/errors.hpp"
#include "topohelly/family.hpp"

namespace topohelly::detail {

// visit(J, intersection) -> false to abort the whole walk.
// Returns true when the walk ran to completion.
template <class ComplexT, class Visit>
bool walk_nonempty_intersections(const SetFamily<ComplexT>& family,
                                 const Caps& caps, int max_depth, Visit visit) {
  if (family.size() > caps.max_family)
    throw resource_limit_error(
        "family of size " + std::to_string(family.size()) +
        " exceeds the subfamily enumeration cap (" +
        std::to_string(caps.max_family) + ")");

  std::size_t visited = 0;
  std::vector<int> indices;

  const std::function<bool(const ComplexT&, int)> extend =
      [&](const ComplexT& current, int next_min) -> bool {
    if (max_depth >= 0 && static_cast<int>(indices.size()) >= max_depth)
      return true;
    for (int j = next_min; j < family.size(); ++j) {
      const ComplexT inter =
          indices.empty() ? family.members[j]
                          : ComplexT::intersection(current, family.members[j]);
      if (inter.empty()) continue;
      if (++visited > caps.max_subfamilies)
        throw resource_limit_error("subfamily enumeration cap exceeded");
      indices.push_back(j);
      const bool keep_going = visit(indices, inter) && extend(inter, j + 1);
      indices.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  ComplexT seed;  // unused at depth 0
  return extend(seed, 0);
}

}  // namespace topohelly::detail
