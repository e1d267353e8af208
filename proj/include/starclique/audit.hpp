#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace starclique {

// One grid point where an inequality failed. `point` keeps the variable
// bindings in evaluation order so reports round-trip losslessly; lhs/rhs are
// exact rationals rendered as strings.
struct AuditViolation {
    std::vector<std::pair<std::string, long long>> point;
    std::string lhs;
    std::string rhs;
};

struct AuditReport {
    std::string inequality;   // identifier, e.g. "case2"
    std::string grid;         // human-readable description of the ranges swept
    long long points_checked = 0;
    std::vector<AuditViolation> violations;
};

// Sweep ranges: k in [k_min, k_max], and for each k a window of `window`
// values of n starting at the large-n threshold k^3+2k^2+2k.
struct AuditOptions {
    long long k_min = 2;
    long long k_max = 5;
    long long window = 50;
};

// Each auditor re-derives one inequality chain from the closed-form proof and
// checks it pointwise in exact rational arithmetic. "lemma6-threshold" covers
// the packing-extraction surplus, "case2"/"case3"/"case4-*" the peeling-cost
// cases, and "subcase1.1"/"subcase1.2" the two single-step recurrences.
AuditReport audit_lemma6_threshold(const AuditOptions& opts = {});
AuditReport audit_case2(const AuditOptions& opts = {});
AuditReport audit_case3(const AuditOptions& opts = {});
AuditReport audit_case4_even(const AuditOptions& opts = {});
AuditReport audit_case4_odd(const AuditOptions& opts = {});
AuditReport audit_subcase11(const AuditOptions& opts = {});
AuditReport audit_subcase12(const AuditOptions& opts = {});

// All of the above, in a fixed order.
std::vector<AuditReport> audit_inequalities(const AuditOptions& opts = {});

nlohmann::json audit_report_to_json(const AuditReport& report);
AuditReport audit_report_from_json(const nlohmann::json& j);

}  // namespace starclique
