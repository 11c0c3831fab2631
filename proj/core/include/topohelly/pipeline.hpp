#pragma once

#include <string>

#include <json.hpp>

#include "topohelly/caps.hpp"
#include "topohelly/family.hpp"
#include "topohelly/generators.hpp"

namespace topohelly {

// Corpus configuration document:
// {
//   "field": 0,
//   "caps": {"max_family": 12, "max_leray_vertices": 14},
//   "out_label": "default",
//   "instances": [
//     {
//       "name": "boxes-2d",
//       "repeat": 4,
//       "generator": {"kind": "boxes", "dim": 2, "extent": [8,8], "n": 5,
//                     "seed": 11, "box_min": 2, "box_max": 4},
//       "filter": {"require": "acyclic", "k": 2, "scan": 64},
//       "checks": {
//         "good_cover": {"expect": true},
//         "acyclic": {"k": 2, "expect": true},
//         "leray": {"bound": 2},
//         "spectral": {"k": 2},
//         "fh": {"k": 2, "hypothesis": "verify"},
//         "nervethm": {"k": 1, "expect": "pass"},
//         "pq": {"p": 3, "q": 2, "expect": true},
//         "tau": {"expect": 2},
//         "tau_counting_bound": true
//       }
//     }, ...
//   ]
// }
//
// `repeat` expands one entry into several with shifted seeds; `filter`
// advances the seed (bounded scan) until the family satisfies the stated
// hypothesis, so corpora of hypothesis-satisfying instances are
// reproducible.  Checks then assert the theorems; any check failure writes
// the family to <out_dir>/counterexamples/ and fails the run.

GeneratorSpec generator_spec_from_json(const nlohmann::json& j);
nlohmann::json generator_spec_to_json(const GeneratorSpec& spec);

struct CorpusResult {
  nlohmann::json manifest;
  int instances = 0;
  int failures = 0;
  int errors = 0;
};

/// Runs the corpus; when out_dir is non-empty, families, counterexamples and
/// the manifest are written under it.  The manifest is deterministic except
/// for the "generated_at" field.
CorpusResult run_corpus(const nlohmann::json& config,
                        const std::string& out_dir);

Caps caps_from_json(const nlohmann::json& j);

}  // namespace topohelly
