#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hookbias {

// One offending index found by a campaign. lhs/rhs carry the two compared
// values as exact decimal strings and stay empty when the check is not a
// two-sided comparison.
struct violation {
    std::int64_t n = 0;
    std::string lhs;
    std::string rhs;
    std::string detail;
    bool operator==(const violation&) const = default;
};

// Named observation worth keeping even when the campaign passes.
struct witness {
    std::string name;
    std::string value;
    bool operator==(const witness&) const = default;
};

// assertion: violations are defects. conjecture: violations are mathematical
// findings, reported but not treated as bugs. informational: trend report,
// never pass/fail.
enum class check_grade { assertion, conjecture, informational };

std::string grade_name(check_grade g);

// Structured outcome of one verification campaign.
struct check_report {
    std::string campaign;
    std::vector<std::pair<std::string, std::string>> params;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<violation> violations;
    std::vector<witness> witnesses;
    std::vector<std::pair<std::string, std::string>> counts;
    check_grade grade = check_grade::assertion;

    bool passed() const { return violations.empty(); }
    // "pass" / "fail" by violations, or "informational" by grade.
    std::string status() const;

    void add_param(std::string key, std::string value);
    void add_violation(std::int64_t n, std::string lhs, std::string rhs, std::string detail);
    void add_witness(std::string name, std::string value);
    void add_count(std::string name, std::string value);

    // campaign_keys: {campaign, params, range, violations, witnesses, counts,
    // status, grade}. bijection_keys: {check-name, n-range, violations
    // [{n, detail}], witness-counts} per the bijection report contract.
    enum class json_flavor { campaign_keys, bijection_keys };
    std::string to_json(json_flavor flavor = json_flavor::campaign_keys) const;

    // Aligned plain-text rendering for terminals.
    std::string to_table() const;

    bool operator==(const check_report&) const = default;
};

} // namespace hookbias
