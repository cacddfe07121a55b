#pragma once

#include <string>

#include <json.hpp>

#include "sympow/harness.hpp"

namespace sympow {

nlohmann::ordered_json instance_to_json(const ConjectureInstance& inst);
/// Rejects unknown keys and polynomials that do not parse in the declared ring.
ConjectureInstance instance_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);

/// Both throw ParseError on malformed JSON.
ConjectureInstance parse_instance(const std::string& text);
Report parse_report(const std::string& text);

}  // namespace sympow
