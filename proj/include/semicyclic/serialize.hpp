#pragma once

// JSON forms of the core value types; kept out of the arithmetic headers so
// the heavy json dependency stays at the boundary.

#include "semicyclic/evaluator.hpp"
#include "semicyclic/reps.hpp"

#include <json.hpp>

namespace semicyclic {

/// {"a_terms": {"<k>": ["<num>/<den>", ... phi entries ...]}}, exponents as
/// signed decimal strings, rationals in canonical lowest terms.
nlohmann::json to_json(const CycScalar& s);
CycScalar cycscalar_from_json(const FieldSpecPtr& spec, const nlohmann::json& j);

/// Row-major matrix dump with an (n, kind, i, a) header.
nlohmann::json rep_to_json(const Rep& rep);

nlohmann::json to_json(const CheckItem& item);
nlohmann::json to_json(const CheckReport& report);

const char* rep_kind_name(RepKind kind);

} // namespace semicyclic
