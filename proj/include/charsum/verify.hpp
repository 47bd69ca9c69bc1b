#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace charsum::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string summary;
    /// First failing instance; null when the suite passed.
    nlohmann::json counterexample;
};

/// orthogonality, wan, cor24, vinogradov, lemma41, lemma36, eq32,
/// decomposition, audit-sweep, oracle
const std::vector<std::string>& suite_names();

/// Throws InvalidParams for an unknown name.
SuiteResult run_suite(std::string_view name);

}  // namespace charsum::verify
