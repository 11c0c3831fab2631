#include <doctest.h>

#include "topohelly/errors.hpp"
#include "topohelly/generators.hpp"
#include "topohelly/serialization.hpp"

using namespace topohelly;
using nlohmann::json;

TEST_CASE("simplicial complex documents round-trip") {
  const SimplicialComplex k = build_simplicial({{1, 2, 3}, {3, 4}, {5}});
  const json doc = complex_to_json(k);
  CHECK(doc["type"] == "simplicial");
  const AnyComplex back = complex_from_json(doc);
  REQUIRE(std::holds_alternative<SimplicialComplex>(back));
  CHECK(std::get<SimplicialComplex>(back) == k);
}

TEST_CASE("cubical complex documents round-trip") {
  const CubicalComplex k = grid_box({1, 2}, {2, 1}, {6, 6});
  const json doc = complex_to_json(k);
  CHECK(doc["type"] == "cubical");
  CHECK(doc["dimension"] == 2);
  const AnyComplex back = complex_from_json(doc);
  REQUIRE(std::holds_alternative<CubicalComplex>(back));
  CHECK(std::get<CubicalComplex>(back) == k);
}

TEST_CASE("family documents round-trip byte-identically") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::annuli;
  spec.extent = {12, 12};
  spec.n = 3;
  spec.seed = 9;
  spec.mixed_boxes = 1;
  const AnyFamily f = generate(spec);
  const json doc = family_to_json(f);
  const AnyFamily back = family_from_json(doc);
  CHECK(family_to_json(back).dump() == doc.dump());

  GeneratorSpec ds;
  ds.kind = GeneratorKind::discrete_sets;
  ds.pattern = "complement-singletons";
  ds.n = 3;
  const AnyFamily g = generate(ds);
  CHECK(family_to_json(family_from_json(family_to_json(g))).dump() ==
        family_to_json(g).dump());
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(complex_from_json(json::object()), malformed_input_error);
  CHECK_THROWS_AS(complex_from_json({{"type", "weird"}}),
                  malformed_input_error);
  CHECK_THROWS_AS(
      complex_from_json({{"type", "cubical"}, {"dimension", 2},
                         {"cubes", json::array({json::array(
                             {json::array({0, 2}), json::array({0, 1})})})}}),
      malformed_input_error);  // interval [0,2] is neither degenerate nor unit
  CHECK_THROWS_AS(
      family_from_json({{"members", json::object()}}),
      malformed_input_error);  // missing ambient

  // A member outside the ambient complex.
  json bad;
  bad["ambient"] = {{"type", "simplicial"},
                    {"facets", json::array({json::array({1, 2})})}};
  bad["members"] = {{"F1", json::array({json::array({7})})}};
  CHECK_THROWS_AS(family_from_json(bad), malformed_input_error);
}

TEST_CASE("homology serialization shape") {
  const HomologyResult h = reduced_homology(
      chain_complex(build_simplicial({{1, 2}, {2, 3}, {1, 3}})));
  const json doc = homology_to_json(h);
  CHECK(doc["0"]["betti"] == 0);
  CHECK(doc["1"]["betti"] == 1);
  CHECK(doc["1"]["torsion"].empty());

  const json empty = homology_to_json(
      reduced_homology(chain_complex(SimplicialComplex{})));
  CHECK(empty["empty_space"] == true);
}

TEST_CASE("file i/o") {
  const std::string path = "/tmp/topohelly_test_family.json";
  GeneratorSpec spec;
  spec.kind = GeneratorKind::boxes;
  spec.extent = {6, 6};
  spec.n = 3;
  spec.seed = 1;
  const AnyFamily f = generate(spec);
  save_family(f, path);
  const AnyFamily g = load_family(path);
  CHECK(family_to_json(g).dump() == family_to_json(f).dump());
  CHECK_THROWS_AS(load_json("/tmp/definitely-missing-file.json"),
                  malformed_input_error);
}
