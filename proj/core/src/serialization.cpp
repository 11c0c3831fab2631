#include "topohelly/serialization.hpp"

#include <fstream>

namespace topohelly {

namespace {

using nlohmann::json;

std::vector<Simplex> maximal_simplices(const SimplicialComplex& k) {
  std::set<Simplex, SimplexLess> non_maximal;
  for (const Simplex& f : k.cells()) {
    if (f.size() < 2) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Simplex sub;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != i) sub.push_back(f[j]);
      non_maximal.insert(std::move(sub));
    }
  }
  std::vector<Simplex> out;
  for (const Simplex& f : k.cells())
    if (!non_maximal.count(f)) out.push_back(f);
  return out;
}

std::vector<Cube> maximal_cubes(const CubicalComplex& k) {
  std::set<Cube> non_maximal;
  for (const Cube& c : k.cells())
    for (const Cube& f : cube_faces(c))
      if (!(f == c)) non_maximal.insert(f);
  std::vector<Cube> out;
  for (const Cube& c : k.cells())
    if (!non_maximal.count(c)) out.push_back(c);
  return out;
}

json cube_to_json(const Cube& c) {
  json intervals = json::array();
  for (int a = 0; a < c.ambient_dim(); ++a)
    intervals.push_back(
        {c.base[a], c.base[a] + (c.interval_unit(a) ? 1 : 0)});
  return intervals;
}

Cube cube_from_json(const json& j, int ambient_dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != ambient_dim)
    throw malformed_input_error("cube must list one interval per grid axis");
  Cube c;
  c.base.resize(ambient_dim);
  for (int a = 0; a < ambient_dim; ++a) {
    const json& iv = j[a];
    if (!iv.is_array() || iv.size() != 2)
      throw malformed_input_error("interval must be a [lo, hi] pair");
    const long lo = iv[0].get<long>();
    const long hi = iv[1].get<long>();
    if (hi != lo && hi != lo + 1)
      throw malformed_input_error("interval must be degenerate or unit");
    c.base[a] = static_cast<int>(lo);
    if (hi == lo + 1) c.extent |= (1u << a);
  }
  return c;
}

Simplex simplex_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw malformed_input_error("simplex must be a non-empty vertex array");
  Simplex s;
  for (const json& v : j) s.push_back(v.get<VertexId>());
  return s;
}

}  // namespace

json complex_to_json(const SimplicialComplex& k) {
  json j;
  j["type"] = "simplicial";
  json facets = json::array();
  for (const Simplex& f : maximal_simplices(k)) facets.push_back(f);
  j["facets"] = std::move(facets);
  return j;
}

json complex_to_json(const CubicalComplex& k) {
  json j;
  j["type"] = "cubical";
  j["dimension"] = k.ambient_dim();
  json cubes = json::array();
  for (const Cube& c : maximal_cubes(k)) cubes.push_back(cube_to_json(c));
  j["cubes"] = std::move(cubes);
  return j;
}

json complex_to_json(const AnyComplex& k) {
  return std::visit([](const auto& c) { return complex_to_json(c); }, k);
}

AnyComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw malformed_input_error("complex document needs a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "simplicial") {
    std::vector<Simplex> facets;
    for (const json& f : j.value("facets", json::array()))
      facets.push_back(simplex_from_json(f));
    return build_simplicial(facets);
  }
  if (type == "cubical") {
    const int d = j.at("dimension").get<int>();
    if (d < 1 || d > 30)
      throw malformed_input_error("grid dimension out of range");
    std::vector<Cube> cubes;
    for (const json& c : j.value("cubes", json::array()))
      cubes.push_back(cube_from_json(c, d));
    return CubicalComplex::from_cubes(d, cubes);
  }
  throw malformed_input_error("unknown complex type: " + type);
}

namespace {

template <class ComplexT>
json family_to_json_impl(const SetFamily<ComplexT>& family) {
  json j;
  j["ambient"] = complex_to_json(family.ambient);
  json members = json::object();
  for (int i = 0; i < family.size(); ++i)
    members[family.names[i]] = complex_to_json(family.members[i])
        [std::is_same_v<ComplexT, CubicalComplex> ? "cubes" : "facets"];
  j["members"] = std::move(members);
  return j;
}

}  // namespace

json family_to_json(const AnyFamily& family) {
  return std::visit([](const auto& f) { return family_to_json_impl(f); },
                    family);
}

AnyFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient"))
    throw malformed_input_error("family document needs an \"ambient\" field");
  AnyComplex ambient = complex_from_json(j.at("ambient"));
  const json members = j.value("members", json::object());

  if (std::holds_alternative<SimplicialComplex>(ambient)) {
    SimplicialFamily f;
    f.ambient = std::get<SimplicialComplex>(std::move(ambient));
    for (const auto& [name, cells] : members.items()) {
      std::vector<Simplex> facets;
      for (const json& c : cells) facets.push_back(simplex_from_json(c));
      f.names.push_back(name);
      f.members.push_back(build_simplicial(facets));
    }
    f.validate();
    return f;
  }
  CubicalFamily f;
  f.ambient = std::get<CubicalComplex>(std::move(ambient));
  const int d = f.ambient.ambient_dim();
  for (const auto& [name, cells] : members.items()) {
    std::vector<Cube> cubes;
    for (const json& c : cells) cubes.push_back(cube_from_json(c, d));
    f.names.push_back(name);
    f.members.push_back(CubicalComplex::from_cubes(d, cubes));
  }
  f.validate();
  return f;
}

json homology_to_json(const HomologyResult& h) {
  json j = json::object();
  if (h.empty_space) {
    j["empty_space"] = true;
    return j;
  }
  for (std::size_t p = 0; p < h.betti.size(); ++p) {
    json entry;
    entry["betti"] = h.betti[p];
    json tors = json::array();
    for (const Int& t : h.torsion[p]) tors.push_back(t.str());
    entry["torsion"] = std::move(tors);
    j[std::to_string(p)] = std::move(entry);
  }
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw malformed_input_error("parse error in " + path + ": " + e.what());
  }
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw malformed_input_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

AnyFamily load_family(const std::string& path) {
  return family_from_json(load_json(path));
}

void save_family(const AnyFamily& family, const std::string& path) {
  save_json(family_to_json(family), path);
}

}  // namespace topohelly
