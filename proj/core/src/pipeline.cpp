#include "topohelly/pipeline.hpp"

#include <chrono>
#include <filesystem>

#include "topohelly/errors.hpp"
#include "topohelly/helly.hpp"
#include "topohelly/nerve.hpp"
#include "topohelly/report_json.hpp"
#include "topohelly/serialization.hpp"
#include "topohelly/spectral.hpp"

namespace topohelly {

namespace {

using nlohmann::json;

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

Caps caps_from_json(const json& j) {
  Caps caps;
  if (j.is_object()) {
    caps.max_family = j.value("max_family", caps.max_family);
    caps.max_leray_vertices =
        j.value("max_leray_vertices", caps.max_leray_vertices);
    caps.max_subfamilies = j.value("max_subfamilies", caps.max_subfamilies);
    caps.max_cells = j.value("max_cells", caps.max_cells);
  }
  return caps;
}

GeneratorSpec generator_spec_from_json(const json& j) {
  GeneratorSpec spec;
  spec.kind = kind_from_string(j.at("kind").get<std::string>());
  spec.ambient_dim = j.value("dim", 2);
  if (j.contains("extent"))
    spec.extent = j.at("extent").get<std::vector<int>>();
  else
    spec.extent.assign(spec.ambient_dim, 16);
  spec.n = j.value("n", 4);
  spec.seed = j.value("seed", 0ull);
  spec.box_min = j.value("box_min", spec.box_min);
  spec.box_max = j.value("box_max", spec.box_max);
  spec.annulus_max_outer = j.value("annulus_max_outer", spec.annulus_max_outer);
  spec.concentric = j.value("concentric", false);
  spec.mixed_boxes = j.value("mixed_boxes", 0);
  spec.punctures_max = j.value("punctures_max", spec.punctures_max);
  spec.pattern = j.value("pattern", std::string{});
  return spec;
}

json generator_spec_to_json(const GeneratorSpec& spec) {
  json j;
  j["kind"] = kind_to_string(spec.kind);
  j["dim"] = spec.ambient_dim;
  j["extent"] = spec.extent;
  j["n"] = spec.n;
  j["seed"] = spec.seed;
  j["box_min"] = spec.box_min;
  j["box_max"] = spec.box_max;
  j["annulus_max_outer"] = spec.annulus_max_outer;
  j["concentric"] = spec.concentric;
  j["mixed_boxes"] = spec.mixed_boxes;
  j["punctures_max"] = spec.punctures_max;
  if (!spec.pattern.empty()) j["pattern"] = spec.pattern;
  return j;
}

namespace {

bool hypothesis_satisfied(const AnyFamily& family, const std::string& require,
                          int k, const Caps& caps) {
  return std::visit(
      [&](const auto& f) {
        if (require == "good-cover")
          return is_good_cover_homological(f, caps).good;
        if (require == "acyclic")
          return is_k_acyclic_family(f, k, caps).verdict;
        if (require == "connectivity")
          return nerve_theorem_check(f, k, caps).hypothesis_ok;
        throw malformed_input_error("unknown filter requirement: " + require);
      },
      family);
}

struct CheckOutcome {
  std::string name;
  bool pass = false;
  json details;
};

template <class ComplexT>
std::vector<CheckOutcome> run_checks(const SetFamily<ComplexT>& family,
                                     const json& checks, const Caps& caps,
                                     std::uint32_t characteristic) {
  std::vector<CheckOutcome> out;
  const auto push = [&](std::string name, bool pass, json details) {
    out.push_back({std::move(name), pass, std::move(details)});
  };

  if (checks.contains("good_cover")) {
    const bool expect = checks["good_cover"].value("expect", true);
    const GoodCoverResult r = is_good_cover_homological(family, caps);
    push("good_cover", r.good == expect, to_json(r, family.names));
  }
  if (checks.contains("acyclic")) {
    const json& c = checks["acyclic"];
    const AcyclicityReport r =
        is_k_acyclic_family(family, c.at("k").get<int>(), caps);
    push("acyclic", r.verdict == c.value("expect", true),
         to_json(r, family.names));
  }
  if (checks.contains("leray")) {
    const json& c = checks["leray"];
    const NerveComplex n = nerve(family, caps);
    const LerayResult r = leray_number(n.complex, caps);
    json details = to_json(r);
    bool pass = true;
    if (c.contains("bound")) {
      details["bound"] = c["bound"];
      pass = r.leray <= c["bound"].get<int>();
    }
    if (c.contains("expect")) pass = pass && r.leray == c["expect"].get<int>();
    push("leray", pass, std::move(details));
  }
  if (checks.contains("spectral")) {
    const json& c = checks["spectral"];
    const SpectralVerificationReport r = spectral_verification(
        family, c.at("k").get<int>(), characteristic, caps);
    json details;
    details["e2_identities"] = to_json(r.claims);
    details["convergence"] = to_json(r.convergence);
    push("spectral",
         r.claims.union_column_ok && r.claims.nerve_row_ok &&
             r.convergence.convergence_ok && r.convergence.union_matches_tot &&
             r.convergence.nerve_identity_ok,
         std::move(details));
  }
  if (checks.contains("fh")) {
    const json& c = checks["fh"];
    const HypothesisMode mode =
        c.value("hypothesis", std::string("verify")) == "assume"
            ? HypothesisMode::assume_by_construction
            : HypothesisMode::verify;
    const FractionalHellyReport r =
        fractional_helly_check(family, c.at("k").get<int>(), caps, mode);
    const bool pass =
        r.verdict && r.hypothesis != HypothesisStatus::failed;
    push("fh", pass, to_json(r));
  }
  if (checks.contains("nervethm")) {
    const json& c = checks["nervethm"];
    const NerveTheoremReport r =
        nerve_theorem_check(family, c.at("k").get<int>(), caps);
    const std::string expect = c.value("expect", std::string("pass"));
    bool pass = false;
    if (expect == "pass")
      pass = r.hypothesis_ok && r.verdict;
    else if (expect == "hypothesis-failure")
      pass = !r.hypothesis_ok;
    else
      pass = r.hypothesis_ok && !r.verdict;  // "fail"
    push("nervethm", pass, to_json(r, family.names));
  }
  if (checks.contains("pq")) {
    const json& c = checks["pq"];
    const PqResult r = pq_condition(family, c.at("p").get<int>(),
                                    c.at("q").get<int>(), caps);
    push("pq", r.holds == c.value("expect", true), to_json(r, family.names));
  }
  if (checks.contains("tau") || checks.value("tau_counting_bound", false)) {
    const TransversalResult r = transversal_number(family, caps);
    json details = to_json(r);
    bool pass = true;
    if (checks.contains("tau") && checks["tau"].contains("expect")) {
      details["expected"] = checks["tau"]["expect"];
      pass = r.tau == checks["tau"]["expect"].get<long>();
    }
    if (checks.value("tau_counting_bound", false)) {
      const DepthResult d = intersection_depth(family);
      const long lower =
          d.depth == 0 ? 0 : (family.size() + d.depth - 1) / d.depth;
      details["depth"] = d.depth;
      details["counting_lower_bound"] = lower;
      pass = pass && r.tau >= lower;
    }
    push("tau", pass, std::move(details));
  }
  return out;
}

}  // namespace

CorpusResult run_corpus(const json& config, const std::string& out_dir) {
  namespace fs = std::filesystem;
  const Caps caps = caps_from_json(config.value("caps", json::object()));
  const std::uint32_t characteristic = config.value("field", 0u);

  if (!out_dir.empty()) {
    fs::create_directories(fs::path(out_dir) / "families");
    fs::create_directories(fs::path(out_dir) / "counterexamples");
  }

  CorpusResult result;
  json instances = json::array();

  for (const json& entry : config.value("instances", json::array())) {
    const int repeat = entry.value("repeat", 1);
    const std::string base_name = entry.at("name").get<std::string>();
    for (int rep = 0; rep < repeat; ++rep) {
      ++result.instances;
      const std::string name =
          repeat == 1 ? base_name : base_name + "-" + std::to_string(rep);
      json record;
      record["name"] = name;

      GeneratorSpec spec = generator_spec_from_json(entry.at("generator"));
      const json filter = entry.value("filter", json::object());
      const int scan = filter.value("scan", 64);
      spec.seed += static_cast<std::uint64_t>(rep) * scan;

      try {
        AnyFamily family = generate(spec);
        if (filter.contains("require")) {
          const std::string require = filter["require"].get<std::string>();
          const int k = filter.value("k", 0);
          int tries = 0;
          while (!hypothesis_satisfied(family, require, k, caps)) {
            if (++tries >= scan)
              throw resource_limit_error(
                  "no hypothesis-satisfying family within the seed scan");
            ++spec.seed;
            family = generate(spec);
          }
        }
        record["seed_used"] = spec.seed;
        record["generator"] = generator_spec_to_json(spec);

        const std::vector<CheckOutcome> outcomes = std::visit(
            [&](const auto& f) {
              return run_checks(f, entry.value("checks", json::object()), caps,
                                characteristic);
            },
            family);

        bool all_pass = true;
        json checks_json = json::object();
        for (const CheckOutcome& c : outcomes) {
          json one;
          one["pass"] = c.pass;
          one["details"] = c.details;
          checks_json[c.name] = std::move(one);
          all_pass = all_pass && c.pass;
        }
        record["checks"] = std::move(checks_json);
        record["status"] = all_pass ? "pass" : "verdict-failure";
        if (!all_pass) ++result.failures;

        if (!out_dir.empty()) {
          const std::string file = name + ".json";
          save_family(family, (fs::path(out_dir) / "families" / file).string());
          if (!all_pass)
            save_family(family,
                        (fs::path(out_dir) / "counterexamples" / file).string());
        }
      } catch (const resource_limit_error& e) {
        record["status"] = "resource-limit";
        record["error"] = e.what();
        ++result.errors;
      } catch (const std::exception& e) {
        record["status"] = "error";
        record["error"] = e.what();
        ++result.errors;
      }
      instances.push_back(std::move(record));
    }
  }

  json manifest;
  manifest["field"] = characteristic;
  manifest["instances"] = std::move(instances);
  manifest["instance_count"] = result.instances;
  manifest["failures"] = result.failures;
  manifest["errors"] = result.errors;
  manifest["generated_at"] = timestamp_utc();
  result.manifest = manifest;

  if (!out_dir.empty())
    save_json(manifest, (fs::path(out_dir) / "manifest.json").string());
  return result;
}

}  // namespace topohelly
