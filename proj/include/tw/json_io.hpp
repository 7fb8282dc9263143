#pragma once

#include "json.hpp"
#include "tw/fuzz.hpp"
#include "tw/ninf.hpp"

namespace tw {

// ADL hooks for nlohmann::json. Key names are the stable machine-facing
// schema of the CLI's --json mode.

void to_json(nlohmann::json& j, const CounterexampleReport& r);
void to_json(nlohmann::json& j, const DiscontinuityReport& r);
void to_json(nlohmann::json& j, const FuzzReport& r);

}  // namespace tw
