#pragma once

#include <pbundle/case_engine.hpp>
#include <pbundle/constraints.hpp>
#include <pbundle/enumerate.hpp>
#include <pbundle/registry.hpp>

#include <json.hpp>

#include <string>

namespace pbundle {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// JSON number when |x| <= 2^53, decimal string otherwise.
Json integer_to_json(const Integer& x);
/// Accepts an integral JSON number or a decimal string; throws InvalidInput otherwise.
Integer integer_from_json(const Json& j, const std::string& what);

Json to_json(const ChernData& c);
Json to_json(const SetupParams& p);
/// Parses a params document; unknown keys and a missing schema_version are errors.
SetupParams params_from_json(const Json& j);

Json to_json(const ConstraintReport& r);
Json to_json(const CaseReplayResult& r);
Json to_json(const ExampleRecord& rec);

Json to_json(const EnumerationQuery& q);
EnumerationQuery query_from_json(const Json& j);
Json to_json(const Survivor& s);
Json to_json(const EnumerationResult& r);

/// Parses text, mapping syntax errors to InvalidInput.
Json parse_json(const std::string& text, const std::string& source);

/// Stable rendering: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace pbundle
