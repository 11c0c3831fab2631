#pragma once

#include <string>

#include <json.hpp>

#include "topohelly/family.hpp"
#include "topohelly/homology.hpp"

namespace topohelly {

using AnyComplex = std::variant<SimplicialComplex, CubicalComplex>;

// Complex documents:
//   {"type": "simplicial", "facets": [[1,2,3], ...]}
//   {"type": "cubical", "dimension": 2, "cubes": [[[0,1],[2,2]], ...]}
// Cells are serialized as maximal cells; the closure is rebuilt on load.
// All integers are decimal JSON numbers.
nlohmann::json complex_to_json(const SimplicialComplex& k);
nlohmann::json complex_to_json(const CubicalComplex& k);
nlohmann::json complex_to_json(const AnyComplex& k);
AnyComplex complex_from_json(const nlohmann::json& j);

// Family documents:
//   {"ambient": <complex document>, "members": {"F1": [<cell>, ...], ...}}
nlohmann::json family_to_json(const AnyFamily& family);
AnyFamily family_from_json(const nlohmann::json& j);

// {"0": {"betti": 1, "torsion": []}, "1": {"betti": 0, "torsion": [2]}, ...}
nlohmann::json homology_to_json(const HomologyResult& h);

AnyFamily load_family(const std::string& path);
void save_family(const AnyFamily& family, const std::string& path);
nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace topohelly
