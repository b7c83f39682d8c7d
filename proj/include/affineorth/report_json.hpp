#pragma once

// Report serialization: the fixed JSON schema consumed by CI and the
// human-readable text rendering. Both carry the same residual values.

#include <json.hpp>
#include <string>
#include <vector>

#include "affineorth/scenarios.hpp"

namespace affineorth {

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

// Throws PreconditionError when the document is missing schema fields or
// carries wrong types.
void validate_report_schema(const nlohmann::json& doc);

std::string render_text(const VerificationReport& report);

} // namespace affineorth
