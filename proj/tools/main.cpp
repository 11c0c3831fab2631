// topohelly: verification CLI for nerves, exact homology, Mayer-Vietoris
// spectral sequences and the combinatorial consequences (fractional Helly,
// (p,q)-condition, transversal numbers) on serialized complexes and set
// families.
//
// Exit codes: 0 all verdicts pass; 1 verdict failure (counterexample kept);
// 2 usage or parse error; 3 resource cap exceeded.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topohelly/errors.hpp"
#include "topohelly/helly.hpp"
#include "topohelly/nerve.hpp"
#include "topohelly/pipeline.hpp"
#include "topohelly/report_json.hpp"
#include "topohelly/serialization.hpp"
#include "topohelly/spectral.hpp"

namespace {

using nlohmann::json;
using namespace topohelly;

bool log_info() {
  const char* v = std::getenv("TOPOHELLY_LOG");
  return v != nullptr && std::string(v) != "quiet";
}

struct Options {
  std::string input;
  std::string output;
  int k = 0;
  int p = 0;
  int q = 0;
  std::uint32_t field = 0;
  std::uint64_t seed = 0;
  int max_n = -1;
  std::string format = "json";
};

struct Outcome {
  json report;
  bool verdict_ok = true;
};

Caps caps_for(const Options& opt) {
  Caps caps;
  if (opt.max_n > 0) caps.max_family = opt.max_n;
  return caps;
}

void emit(json report, const std::string& path) {
  if (path.empty())
    std::cout << report.dump(2) << "\n";
  else
    save_json(report, path);
}

Outcome cmd_homology(const Options& opt) {
  const json doc = load_json(opt.input);
  AnyComplex complex;
  if (doc.contains("ambient")) {
    // Family document: report the homology of the union of the members.
    complex = std::visit(
        [](const auto& f) { return AnyComplex(family_union(f)); },
        family_from_json(doc));
  } else {
    complex = complex_from_json(doc);
  }
  Outcome out;
  std::visit(
      [&](const auto& k) {
        const ChainComplex c = chain_complex(k);
        const HomologyResult reduced = reduced_homology(c);
        out.report["reduced_homology"] = homology_to_json(reduced);
        out.report["betti_field"] = betti_numbers_field(c, opt.field);
        long chi = 0;
        for (int p = 0; p <= c.top_dim; ++p)
          chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(c.ranks[p]);
        out.report["euler_characteristic"] = chi;
      },
      complex);
  return out;
}

Outcome cmd_nerve(const Options& opt) {
  const AnyFamily family = family_from_json(load_json(opt.input));
  Outcome out;
  std::visit(
      [&](const auto& f) { out.report = to_json(nerve(f, caps_for(opt))); },
      family);
  return out;
}

Outcome cmd_leray(const Options& opt) {
  const json doc = load_json(opt.input);
  Outcome out;
  Caps caps = caps_for(opt);
  if (doc.contains("ambient")) {
    const AnyFamily family = family_from_json(doc);
    std::visit(
        [&](const auto& f) {
          const NerveComplex n = nerve(f, caps);
          out.report = to_json(leray_number(n.complex, caps));
          out.report["target"] = "nerve";
        },
        family);
  } else {
    const AnyComplex complex = complex_from_json(doc);
    if (!std::holds_alternative<SimplicialComplex>(complex))
      throw malformed_input_error(
          "leray expects a simplicial complex or a family document");
    out.report = to_json(
        leray_number(std::get<SimplicialComplex>(complex), caps));
    out.report["target"] = "complex";
  }
  return out;
}

Outcome cmd_acyclic(const Options& opt) {
  const AnyFamily family = family_from_json(load_json(opt.input));
  Outcome out;
  std::visit(
      [&](const auto& f) {
        const AcyclicityReport r = is_k_acyclic_family(f, opt.k, caps_for(opt));
        out.report = to_json(r, f.names);
        out.verdict_ok = r.verdict;
      },
      family);
  return out;
}

Outcome cmd_fh(const Options& opt) {
  const AnyFamily family = family_from_json(load_json(opt.input));
  Outcome out;
  std::visit(
      [&](const auto& f) {
        const FractionalHellyReport r =
            fractional_helly_check(f, opt.k, caps_for(opt));
        out.report = to_json(r);
        out.verdict_ok =
            r.verdict && r.hypothesis != HypothesisStatus::failed;
      },
      family);
  return out;
}

Outcome cmd_pq(const Options& opt) {
  const AnyFamily family = family_from_json(load_json(opt.input));
  Outcome out;
  std::visit(
      [&](const auto& f) {
        const PqResult r = pq_condition(f, opt.p, opt.q, caps_for(opt));
        out.report = to_json(r, f.names);
        const TransversalResult t = transversal_number(f, caps_for(opt));
        out.report["transversal"] = to_json(t);
        out.verdict_ok = r.holds;
      },
      family);
  return out;
}

Outcome cmd_spectral(const Options& opt) {
  const AnyFamily family = family_from_json(load_json(opt.input));
  Outcome out;
  std::visit(
      [&](const auto& f) {
        const Caps caps = caps_for(opt);
        const SpectralVerificationReport r =
            spectral_verification(f, opt.k, opt.field, caps);
        const DoubleComplex dc = mayer_vietoris_double_complex(f, caps);
        SpectralSequence first(dc, Filtration::first, opt.field);
        SpectralSequence second(dc, Filtration::second, opt.field);
        out.report["e1_first"] = to_json(first.page(1, false));
        out.report["e1_second"] = to_json(second.page(1, false));
        out.report["e2_identities"] = to_json(r.claims);
        out.report["convergence"] = to_json(r.convergence);
        out.verdict_ok = r.claims.union_column_ok && r.claims.nerve_row_ok &&
                         r.convergence.convergence_ok &&
                         r.convergence.union_matches_tot &&
                         r.convergence.nerve_identity_ok;
      },
      family);
  return out;
}

Outcome cmd_nervethm(const Options& opt) {
  const AnyFamily family = family_from_json(load_json(opt.input));
  Outcome out;
  std::visit(
      [&](const auto& f) {
        const NerveTheoremReport r =
            nerve_theorem_check(f, opt.k, caps_for(opt));
        out.report = to_json(r, f.names);
        // A hypothesis failure is a distinguished report, not a verdict
        // failure: the theorem says nothing about such families.
        out.verdict_ok = !r.hypothesis_ok || r.verdict;
        out.report["status_hint"] =
            r.hypothesis_ok ? "hypothesis-ok" : "hypothesis-failure";
      },
      family);
  return out;
}

Outcome cmd_corpus(const Options& opt) {
  json config = load_json(opt.input);
  if (opt.seed != 0) config["seed_offset"] = opt.seed;
  if (config.contains("seed_offset")) {
    const std::uint64_t off = config["seed_offset"].get<std::uint64_t>();
    for (json& inst : config["instances"])
      inst["generator"]["seed"] =
          inst["generator"].value("seed", 0ull) + off;
  }
  if (opt.max_n > 0) config["caps"]["max_family"] = opt.max_n;
  if (opt.field != 0) config["field"] = opt.field;

  const CorpusResult r = run_corpus(config, opt.output);
  Outcome out;
  out.report = r.manifest;
  out.verdict_ok = r.failures == 0 && r.errors == 0;
  if (log_info())
    std::cerr << "corpus: " << r.instances << " instances, " << r.failures
              << " failures, " << r.errors << " errors\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for nerve/homology/spectral checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--field", opt.field, "coefficient characteristic (0 or prime)");
  app.add_option("--seed", opt.seed, "seed offset for corpus generation");
  app.add_option("--max-n", opt.max_n, "subfamily enumeration cap override");
  app.add_option("--format", opt.format, "report format (json)")
      ->check(CLI::IsMember({"json"}));

  const auto add_io = [&](CLI::App* cmd, bool needs_output_dir = false) {
    cmd->add_option("--input", opt.input, "input document")->required();
    cmd->add_option("--output", opt.output,
                    needs_output_dir ? "output directory"
                                     : "report file (stdout when omitted)");
  };

  CLI::App* homology = app.add_subcommand(
      "homology", "Betti numbers and torsion of a serialized complex");
  add_io(homology);
  CLI::App* nerve_cmd =
      app.add_subcommand("nerve", "nerve facets and witness cells");
  add_io(nerve_cmd);
  CLI::App* leray =
      app.add_subcommand("leray", "Leray number by induced-subcomplex sweep");
  add_io(leray);
  CLI::App* acyclic = app.add_subcommand(
      "acyclic", "(k-|G|)-acyclicity over all subfamilies");
  add_io(acyclic);
  acyclic->add_option("--k", opt.k, "acyclicity level")->required();
  CLI::App* fh = app.add_subcommand(
      "fh", "fractional Helly bound check (runs acyclicity first)");
  add_io(fh);
  fh->add_option("--k", opt.k, "acyclicity level")->required();
  CLI::App* pq = app.add_subcommand(
      "pq", "(p,q)-condition plus the exact transversal number");
  add_io(pq);
  pq->add_option("--p", opt.p, "p")->required();
  pq->add_option("--q", opt.q, "q")->required();
  CLI::App* spectral = app.add_subcommand(
      "spectral", "E^1/E^2 dumps, E^2 claims and convergence");
  add_io(spectral);
  spectral->add_option("--k", opt.k, "acyclicity level")->required();
  CLI::App* nervethm =
      app.add_subcommand("nervethm", "homology nerve-theorem check");
  add_io(nervethm);
  nervethm->add_option("--k", opt.k, "connectivity level")->required();
  CLI::App* corpus = app.add_subcommand(
      "corpus", "generate a corpus and run the full pipeline");
  add_io(corpus, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    Outcome out;
    if (homology->parsed()) out = cmd_homology(opt);
    if (nerve_cmd->parsed()) out = cmd_nerve(opt);
    if (leray->parsed()) out = cmd_leray(opt);
    if (acyclic->parsed()) out = cmd_acyclic(opt);
    if (fh->parsed()) out = cmd_fh(opt);
    if (pq->parsed()) out = cmd_pq(opt);
    if (spectral->parsed()) out = cmd_spectral(opt);
    if (nervethm->parsed()) out = cmd_nervethm(opt);
    if (corpus->parsed()) out = cmd_corpus(opt);

    out.report["status"] = out.verdict_ok ? "ok" : "verdict-failure";
    if (corpus->parsed()) {
      // The corpus manifest is already written to the output directory.
      std::cout << out.report.dump(2) << "\n";
    } else {
      emit(out.report, opt.output);
    }
    return out.verdict_ok ? 0 : 1;
  } catch (const resource_limit_error& e) {
    json err{{"status", "resource-limit"}, {"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 3;
  } catch (const malformed_input_error& e) {
    json err{{"status", "parse-error"}, {"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"status", "error"}, {"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  }
}
