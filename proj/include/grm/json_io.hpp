#pragma once

#include <string>

#include "json.hpp"

#include "grm/analysis.hpp"

namespace grm {

nlohmann::json field_to_json(const FieldTable& f);
nlohmann::json code_to_json(const CyclicCode& c);
nlohmann::json code_to_json(const ExtendedCode& c);

// Rebuilds a code from its descriptor.  The generator is re-derived from the
// defining set and cross-checked against the serialized coefficients, so a
// descriptor that does not describe a real cyclic code is rejected.
CyclicCode code_from_json(const nlohmann::json& j);
ExtendedCode extended_code_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AnalysisReport& r);

// Canonical text form: sorted keys, two-space indent, trailing newline.
// Reports compared byte-for-byte use this and only this.
std::string dump_deterministic(const nlohmann::json& j);

}  // namespace grm
