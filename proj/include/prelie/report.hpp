#pragma once

#include <string>
#include <vector>

namespace prelie {

/// Verdict of a single checker. `witness` holds 1-based basis labels of a
/// violating tuple (empty when the property holds or no tuple applies).
struct Report {
    bool holds = true;
    std::vector<int> witness;
    std::string message;

    explicit operator bool() const { return holds; }

    static Report pass(std::string msg = {}) { return Report{true, {}, std::move(msg)}; }
    static Report fail(std::vector<int> witness, std::string msg) {
        return Report{false, std::move(witness), std::move(msg)};
    }
};

} // namespace prelie
