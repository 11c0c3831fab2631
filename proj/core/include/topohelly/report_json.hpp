#pragma once

#include <json.hpp>

#include "topohelly/helly.hpp"
#include "topohelly/nerve.hpp"
#include "topohelly/spectral.hpp"

namespace topohelly {

// Exact rationals serialize as {"num": "...", "den": "..."} string pairs;
// beta and beta*n additionally carry a decimal rendering (display only).
nlohmann::json rat_to_json(const Rat& r);

nlohmann::json to_json(const AcyclicityReport& r,
                       const std::vector<std::string>& names);
nlohmann::json to_json(const GoodCoverResult& r,
                       const std::vector<std::string>& names);
nlohmann::json to_json(const LerayResult& r);
nlohmann::json to_json(const NerveComplex& n);
nlohmann::json to_json(const FractionalHellyReport& r);
nlohmann::json to_json(const PqResult& r, const std::vector<std::string>& names);
nlohmann::json to_json(const TransversalResult& r);
nlohmann::json to_json(const SpectralPage& p);
nlohmann::json to_json(const E2IdentityReport& r);
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const NerveTheoremReport& r,
                       const std::vector<std::string>& names);

}  // namespace topohelly
