#pragma once

// Batteries of exact checks of the I_n structure theory, grouped in suites.

#include <cstdint>
#include <string>
#include <vector>

#include "prelie/io.hpp"

namespace prelie {

struct VerifyConfig {
    /// prelim, t1, t2, cor, examples, remarks or all.
    std::string suite = "all";
    std::uint64_t seed = 1;
    std::size_t max_n = 6;
    std::vector<std::string> fields{"q", "gf3", "gf5", "qi"};
    std::uint64_t cap = 10'000'000;
    unsigned workers = 1;
};

struct CheckRecord {
    std::string suite;
    std::string name;
    /// Short statement of the claim the check would falsify.
    std::string anchor;
    bool passed = false;
    json witness;
    std::string detail;
    double elapsed_seconds = 0;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<CheckRecord> records;

    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs the requested suite; deterministic for a fixed config. Throws Error
/// on an unknown suite or field name.
VerifyReport verify_theorems(const VerifyConfig& config);

json to_json(const VerifyReport& report, bool with_timing = true);

} // namespace prelie
