#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ppforge/rational.hpp"

namespace ppforge {

// One violated identity, localized to the basis tuple it was evaluated at.
// Indices are 0-based internally; printing is always 1-based.
struct Violation {
    std::string identity;
    std::vector<int> indices;
    Vec lhs;
    Vec rhs;
};

struct CheckOptions {
    bool stop_at_first = false;
};

struct CheckReport {
    bool passed = true;
    std::vector<Violation> violations;

    void add(std::string identity, std::vector<int> indices, Vec lhs, Vec rhs) {
        passed = false;
        violations.push_back(Violation{std::move(identity), std::move(indices),
                                       std::move(lhs), std::move(rhs)});
    }

    // Records a violation unless both sides agree; returns true when they agree.
    bool require_eq(const std::string& identity, const std::vector<int>& indices,
                    const Vec& lhs, const Vec& rhs) {
        if (lhs == rhs) return true;
        add(identity, indices, lhs, rhs);
        return false;
    }

    void merge(const CheckReport& other, const std::string& prefix = "") {
        for (const auto& v : other.violations) {
            Violation w = v;
            if (!prefix.empty()) w.identity = prefix + w.identity;
            violations.push_back(std::move(w));
            passed = false;
        }
    }

    bool has(const std::string& identity_prefix) const {
        for (const auto& v : violations)
            if (v.identity.rfind(identity_prefix, 0) == 0) return true;
        return false;
    }
};

inline std::string violation_to_string(const Violation& v) {
    std::string s = v.identity + " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v.indices[i] + 1);
    }
    s += "): lhs = " + vec_to_string(v.lhs) + ", rhs = " + vec_to_string(v.rhs);
    return s;
}

} // namespace ppforge
