#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sodd {

struct Violation {
    std::string property;
    std::vector<std::int64_t> witness;
    std::string detail;
};

// Outcome of a property check. Lists every violation, not just the first.
struct Report {
    std::vector<std::string> checked;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    bool passes(const std::string& property) const {
        for (const auto& v : violations)
            if (v.property == property) return false;
        return true;
    }
    void add(std::string property, std::vector<std::int64_t> witness, std::string detail = {}) {
        violations.push_back({std::move(property), std::move(witness), std::move(detail)});
    }
    void merge(const Report& other, const std::string& prefix = {}) {
        for (const auto& c : other.checked) checked.push_back(prefix + c);
        for (const auto& v : other.violations)
            violations.push_back({prefix + v.property, v.witness, v.detail});
    }
    std::string summary() const;
};

}  // namespace sodd
