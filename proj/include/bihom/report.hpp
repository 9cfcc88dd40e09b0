#ifndef BIHOM_REPORT_HPP
#define BIHOM_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bihom {

/// Outcome of one named axiom check. On failure the witness pins down a
/// concrete basis tuple and shows both sides of the identity that broke.
struct CheckResult {
    std::string name;
    bool passed;
    std::string witness; // empty when passed

    bool operator==(const CheckResult&) const = default;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::optional<CheckResult> first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return c;
        return std::nullopt;
    }
};

} // namespace bihom

#endif
