#include "starclique/audit.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <stdexcept>

#include "starclique/formulas.hpp"

namespace starclique {

namespace {

using rat = boost::multiprecision::cpp_rational;

rat c2(const rat& m) { return m * (m - 1) / 2; }

std::string rat_str(const rat& v) { return v.str(); }

// Accumulates checks of "lhs >= rhs" into a report.
struct Sweeper {
    AuditReport rep;

    explicit Sweeper(std::string inequality, std::string grid) {
        rep.inequality = std::move(inequality);
        rep.grid = std::move(grid);
    }

    void check(std::vector<std::pair<std::string, long long>> point, const rat& lhs, const rat& rhs) {
        ++rep.points_checked;
        if (lhs < rhs) rep.violations.push_back({std::move(point), rat_str(lhs), rat_str(rhs)});
    }
};

constexpr int any_parity = -1;

// Walks k over [k_min, k_max] (optionally one parity) and n over a window of
// values starting at the large-n threshold for that k.
void for_grid(const AuditOptions& opts, int parity,
              const std::function<void(long long, long long)>& fn) {
    long long visited = 0;
    for (long long k = opts.k_min; k <= opts.k_max; ++k) {
        if (k < 2) continue;
        if (parity != any_parity && k % 2 != parity) continue;
        long long n0 = theorem3_threshold(k);
        for (long long n = n0; n < checked_add(n0, opts.window); ++n) {
            fn(k, n);
            ++visited;
        }
    }
    if (visited == 0) throw std::invalid_argument("audit: empty grid");
}

std::string grid_desc(const AuditOptions& opts, const char* parity_note, const char* inner) {
    std::string s = "k in [" + std::to_string(opts.k_min) + ", " + std::to_string(opts.k_max) + "]";
    if (*parity_note) s += std::string(" (") + parity_note + ")";
    s += ", n in [k^3+2k^2+2k, k^3+2k^2+2k+" + std::to_string(opts.window - 1) + "]";
    if (*inner) s += std::string(", ") + inner;
    return s;
}

}  // namespace

AuditReport audit_lemma6_threshold(const AuditOptions& opts) {
    Sweeper sw("lemma6-threshold", grid_desc(opts, "", "t in [0, f(k,n)]"));
    for_grid(opts, any_parity, [&](long long k, long long n) {
        rat R = rat(k) * (n - 1) + 1;
        long long tmax = f_threshold(k, n);
        for (long long t = 0; t <= tmax; ++t) {
            rat lhs = R * t + c2(rat(t)) + rat(t) * (k + 1) + rat(t) * (k + 1) / 2
                      - rat(t) * (t + 1) * (k + 1) * (k + 1);
            sw.check({{"k", k}, {"n", n}, {"t", t}}, lhs, 0);
        }
    });
    return sw.rep;
}

AuditReport audit_case2(const AuditOptions& opts) {
    Sweeper sw("case2", grid_desc(opts, "", "j in [2, n-3k-3]"));
    for_grid(opts, any_parity, [&](long long k, long long n) {
        for (long long j = 2; j <= n - 3 * k - 3; ++j) {
            rat lhs = rat(2) * k * n - rat(k) * j - rat(4) * k * k
                      - rat(k - 2) * (k + 1) * (k + 1) * j / (j - 1);
            sw.check({{"k", k}, {"n", n}, {"j", j}}, lhs, 0);
        }
    });
    return sw.rep;
}

AuditReport audit_case3(const AuditOptions& opts) {
    Sweeper sw("case3", grid_desc(opts, "", "j in [n-3k-2, n-4]"));
    for_grid(opts, any_parity, [&](long long k, long long n) {
        for (long long j = n - 3 * k - 2; j <= n - 4; ++j) {
            rat lhs = rat(k) * (n - 3 * k - 3) * (n - k + 2) - rat(k + 1) * (k + 1) * (k - 2) * j;
            sw.check({{"k", k}, {"n", n}, {"j", j}}, lhs, 0);
        }
    });
    return sw.rep;
}

AuditReport audit_case4_even(const AuditOptions& opts) {
    Sweeper sw("case4-even", grid_desc(opts, "even k", ""));
    for_grid(opts, 0, [&](long long k, long long n) {
        rat kk1 = rat(k + 1) * (k + 1);
        rat lhs = (rat(k) * k * (n - 3 * k - 3) * (n - k + 2)
                   + (rat(7) * k * k - 2 * k + rat(2) * k * n) * kk1)
                  / kk1;
        rat rhs = rat(k) * k * n + 6 * k;
        sw.check({{"k", k}, {"n", n}}, lhs, rhs);
    });
    return sw.rep;
}

AuditReport audit_case4_odd(const AuditOptions& opts) {
    Sweeper sw("case4-odd", grid_desc(opts, "odd k", ""));
    for_grid(opts, 1, [&](long long k, long long n) {
        rat lhs = rat(k) * k * (n - 3 * k - 3) * (n - k + 2) / (rat(k + 1) * (k + 1))
                  + rat(2) * k * (3 * k - 1) + rat(2) * k * k + rat(k) * n;
        rat rhs = rat(k) * k * n + 6 * k;
        sw.check({{"k", k}, {"n", n}}, lhs, rhs);
    });
    return sw.rep;
}

AuditReport audit_subcase11(const AuditOptions& opts) {
    Sweeper sw("subcase1.1", grid_desc(opts, "", "side in {1, 2}"));
    for_grid(opts, any_parity, [&](long long k, long long n) {
        rat step = (rat(k) * k * (2 * n - 3) + 2 * k) / 2;
        rat lhs1 = rat(k) * (rat(k) * (n - 2) + 1 + (k + 1) / 2);
        sw.check({{"k", k}, {"n", n}, {"side", 1}}, lhs1, step);
        rat lhs2 = rat(rhat_star(k, n - 1)) + step;
        sw.check({{"k", k}, {"n", n}, {"side", 2}}, lhs2, rat(rhat_star(k, n)));
    });
    return sw.rep;
}

AuditReport audit_subcase12(const AuditOptions& opts) {
    Sweeper sw("subcase1.2", grid_desc(opts, "", "side in {1, 2}"));
    for_grid(opts, any_parity, [&](long long k, long long n) {
        rat step = (rat(k) * k * (2 * n - 3) + k) / 2;
        rat surplus = (rat(k) * n - rat(2) * k * k) / (rat(k + 1) * (k + 1));
        rat lhs1 = (surplus + k / 2 + 1) * (n - k);
        sw.check({{"k", k}, {"n", n}, {"side", 1}}, lhs1, step);
        rat lhs2 = rat(rhat_star(k, n - 1)) + step;
        sw.check({{"k", k}, {"n", n}, {"side", 2}}, lhs2, rat(rhat_star(k, n)));
    });
    return sw.rep;
}

std::vector<AuditReport> audit_inequalities(const AuditOptions& opts) {
    std::vector<AuditReport> out{audit_lemma6_threshold(opts), audit_case2(opts),
                                 audit_case3(opts)};
    // The case-4 auditors are parity-sliced; include each only when its
    // parity occurs in [k_min, k_max].
    bool has_even = opts.k_min <= opts.k_max &&
                    (opts.k_min % 2 == 0 || opts.k_min + 1 <= opts.k_max);
    bool has_odd = opts.k_min <= opts.k_max &&
                   (opts.k_min % 2 != 0 || opts.k_min + 1 <= opts.k_max);
    if (has_even) out.push_back(audit_case4_even(opts));
    if (has_odd) out.push_back(audit_case4_odd(opts));
    out.push_back(audit_subcase11(opts));
    out.push_back(audit_subcase12(opts));
    return out;
}

nlohmann::json audit_report_to_json(const AuditReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json point = nlohmann::json::array();
        for (const auto& [name, value] : v.point) point.push_back({name, value});
        violations.push_back({{"point", point}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    }
    return {{"inequality", report.inequality},
            {"grid", report.grid},
            {"points_checked", report.points_checked},
            {"violations", violations}};
}

AuditReport audit_report_from_json(const nlohmann::json& j) {
    AuditReport report;
    report.inequality = j.at("inequality").get<std::string>();
    report.grid = j.at("grid").get<std::string>();
    report.points_checked = j.at("points_checked").get<long long>();
    for (const auto& v : j.at("violations")) {
        AuditViolation viol;
        for (const auto& binding : v.at("point"))
            viol.point.emplace_back(binding.at(0).get<std::string>(), binding.at(1).get<long long>());
        viol.lhs = v.at("lhs").get<std::string>();
        viol.rhs = v.at("rhs").get<std::string>();
        report.violations.push_back(std::move(viol));
    }
    return report;
}

}  // namespace starclique
