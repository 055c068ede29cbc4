#pragma once

#include <json.hpp>

#include "cpk/analysis.hpp"

namespace cpk {

using json = nlohmann::json;

// Big integers travel as decimal strings, rationals as exact "p/q" strings
// with a convenience decimal rendering next to them.
json to_json(const GrowthBracket& bracket);
json to_json(const RootBracket& bracket);
json to_json(const EquivClassReport& report);
json to_json(const CensusReport& report);
json to_json(const VerificationReport& report);

}  // namespace cpk
