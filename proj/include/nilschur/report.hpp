#pragma once

#include <string>
#include <vector>

namespace nilschur {

/// Outcome of one verification check.  When a check fails, the witness holds
/// a printable counterexample (the inputs and both sides of the identity).
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;
};

/// A named batch of verification checks with per-check outcomes.
struct VerificationReport {
    std::string title;
    std::vector<CheckResult> cases;

    void add(std::string name, bool passed, std::string witness = "") {
        cases.push_back({std::move(name), passed, std::move(witness)});
    }

    void merge(const VerificationReport& other) {
        for (const auto& c : other.cases)
            cases.push_back(c);
    }

    /// Prefixes every case name of `other`, so the originating suite stays
    /// visible when reports are folded together.
    void merge_prefixed(const std::string& prefix, const VerificationReport& other) {
        for (const auto& c : other.cases)
            cases.push_back({prefix + c.name, c.passed, c.witness});
    }

    bool all_passed() const {
        for (const auto& c : cases)
            if (!c.passed)
                return false;
        return true;
    }

    int failed_count() const {
        int bad = 0;
        for (const auto& c : cases)
            if (!c.passed)
                ++bad;
        return bad;
    }
};

} // namespace nilschur
