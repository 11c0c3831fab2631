#include "topohelly/report_json.hpp"

#include <cmath>
#include <sstream>

namespace topohelly {

namespace {

using nlohmann::json;

json names_of(const std::vector<int>& idx,
              const std::vector<std::string>& names) {
  json out = json::array();
  for (int i : idx)
    out.push_back(i >= 0 && i < static_cast<int>(names.size())
                      ? names[i]
                      : std::to_string(i));
  return out;
}

json violation_to_json(const AcyclicityViolation& v,
                       const std::vector<std::string>& names) {
  json out;
  out["subfamily"] = names_of(v.subfamily, names);
  out["member_indices"] = v.subfamily;
  out["dimension"] = v.dimension;
  out["betti"] = v.betti;
  json tors = json::array();
  for (const Int& t : v.torsion) tors.push_back(t.str());
  out["torsion"] = std::move(tors);
  return out;
}

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

json rat_to_json(const Rat& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  json out;
  out["num"] = Int(numerator(r)).str();
  out["den"] = Int(denominator(r)).str();
  return out;
}

json to_json(const AcyclicityReport& r, const std::vector<std::string>& names) {
  json out;
  out["k"] = r.k;
  out["verdict"] = r.verdict;
  out["subfamilies_checked"] = r.subfamilies_checked;
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back(violation_to_json(viol, names));
  out["violations"] = std::move(v);
  return out;
}

json to_json(const GoodCoverResult& r, const std::vector<std::string>& names) {
  json out;
  out["good_cover"] = r.good;
  out["subfamilies_checked"] = r.subfamilies_checked;
  if (r.witness) out["witness"] = violation_to_json(*r.witness, names);
  return out;
}

json to_json(const LerayResult& r) {
  json out;
  out["leray_number"] = r.leray;
  out["subcomplexes_checked"] = r.subcomplexes_checked;
  if (r.worst) {
    out["worst"] = {{"vertex_set", r.worst->vertex_set},
                    {"dimension", r.worst->dimension}};
  }
  return out;
}

json to_json(const NerveComplex& n) {
  json out;
  out["member_names"] = n.member_names;
  json faces = json::array();
  for (const auto& [face, cell] : n.witness) {
    json entry;
    entry["face"] = face;
    entry["witness_cell"] = cell;
    faces.push_back(std::move(entry));
  }
  out["faces"] = std::move(faces);
  out["dim"] = n.complex.dim();
  out["face_count"] = n.complex.cell_count();
  return out;
}

json to_json(const FractionalHellyReport& r) {
  json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["intersecting_subsets"] = r.intersecting_subsets.str();
  out["total_subsets"] = r.total_subsets.str();
  out["alpha"] = rat_to_json(r.alpha);
  const double alpha_d = r.alpha.convert_to<double>();
  const double beta_d = 1.0 - std::pow(1.0 - alpha_d, 1.0 / (r.k + 1));
  out["beta_decimal"] = decimal(beta_d);
  out["beta_n_decimal"] = decimal(beta_d * r.n);
  out["beta_n_floor"] = r.beta_n_floor;
  out["depth"] = r.depth;
  out["depth_witness"] = r.depth_witness;
  out["verdict"] = r.verdict;
  switch (r.hypothesis) {
    case HypothesisStatus::verified: out["hypothesis"] = "verified"; break;
    case HypothesisStatus::assumed: out["hypothesis"] = "assumed"; break;
    case HypothesisStatus::failed: out["hypothesis"] = "failed"; break;
  }
  return out;
}

json to_json(const PqResult& r, const std::vector<std::string>& names) {
  json out;
  out["p"] = r.p;
  out["q"] = r.q;
  out["holds"] = r.holds;
  out["vacuous"] = r.vacuous;
  if (!r.holds) out["violating_subset"] = names_of(r.violating_subset, names);
  return out;
}

json to_json(const TransversalResult& r) {
  json out;
  out["tau"] = r.tau;
  out["witness_cells"] = r.witness_cells;
  out["method"] = r.method;
  return out;
}

json to_json(const SpectralPage& p) {
  json out;
  out["r"] = p.r == kInfinityPage ? json("infinity") : json(p.r);
  out["filtration"] = p.filtration == Filtration::first ? "first" : "second";
  out["characteristic"] = p.characteristic;
  out["dims"] = p.dims;  // dims[p][q]
  return out;
}

json to_json(const E2IdentityReport& r) {
  json out;
  out["k"] = r.k;
  out["characteristic"] = r.characteristic;
  out["union_column"] = r.union_column_ok;
  out["nerve_row"] = r.nerve_row_ok;
  const auto mismatches = [](const std::vector<ClaimMismatch>& ms) {
    json arr = json::array();
    for (const auto& m : ms)
      arr.push_back({{"p", m.p}, {"q", m.q}, {"got", m.got},
                     {"expected", m.expected}});
    return arr;
  };
  out["union_column_mismatches"] = mismatches(r.union_column_mismatches);
  out["nerve_row_mismatches"] = mismatches(r.nerve_row_mismatches);
  out["e2_first"] = to_json(r.e2_first);
  out["e2_second"] = to_json(r.e2_second);
  return out;
}

json to_json(const ConvergenceReport& r) {
  json out;
  out["k"] = r.k;
  out["characteristic"] = r.characteristic;
  out["convergence_ok"] = r.convergence_ok;
  out["union_matches_tot"] = r.union_matches_tot;
  out["nerve_identity_ok"] = r.nerve_identity_ok;
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"h_total", row.h_total},
                    {"sum_einf_first", row.sum_einf_first},
                    {"sum_einf_second", row.sum_einf_second},
                    {"betti_union", row.betti_union},
                    {"betti_nerve", row.betti_nerve}});
  }
  out["rows"] = std::move(rows);
  return out;
}

json to_json(const NerveTheoremReport& r,
             const std::vector<std::string>& names) {
  json out;
  out["k"] = r.k;
  out["hypothesis_ok"] = r.hypothesis_ok;
  if (r.hypothesis_violation)
    out["hypothesis_violation"] =
        violation_to_json(*r.hypothesis_violation, names);
  out["verdict"] = r.verdict;
  json pairs = json::array();
  for (std::size_t n = 0; n < r.betti_pairs.size(); ++n)
    pairs.push_back({{"n", n},
                     {"betti_union", r.betti_pairs[n].first},
                     {"betti_nerve", r.betti_pairs[n].second}});
  out["betti_pairs"] = std::move(pairs);
  return out;
}

}  // namespace topohelly
