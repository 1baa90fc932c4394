#ifndef JESMA_REPORT_HPP
#define JESMA_REPORT_HPP

#include "jesma/lemmas.hpp"
#include "jesma/mason.hpp"
#include "jesma/solver.hpp"
#include "jesma/triple.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace jesma::report {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Skeleton with every top-level field present (null until filled):
/// schema_version, command, inputs, triple, solutions, predicted, agrees,
/// mason, lemmas, campaign, seed, elapsed_ms.
json skeleton(const std::string& command);

json to_json(const ExponentSet& s);
json to_json(const PythagoreanTriple& tr);
json to_json(const MasonReport& r);
json to_json(const InstanceOutcome& o);
json to_json(const Instance& inst);
json to_json(const CampaignConfig& cfg);
json to_json(const CampaignReport& r);

/// Report with the timing field removed, for determinism comparisons.
json without_timing(json report);

/// Indented key: value rendering for terminals.
std::string render_text(const json& report);

} // namespace jesma::report

#endif
