#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charsum/bounds.hpp"
#include "charsum/field.hpp"
#include "charsum/sums.hpp"

namespace charsum::report {

using nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

/// {p, k, r, q, n, modulus, generator, basis}; identical for identical params.
json field_manifest(const Field& field);

/// Tool version, command line, UTC timestamp, seed note. Only the timestamp
/// varies between runs.
json run_manifest(const std::vector<std::string>& argv);

json to_json(const SumResult& sum);
json to_json(const BoundReport& report);
json to_json(const bounds::ThresholdResult& t);
json to_json(const bounds::Thm35Bound& b);

}  // namespace charsum::report
