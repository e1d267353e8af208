#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <cmath>

#include "starclique/audit.hpp"
#include "starclique/formulas.hpp"

using namespace starclique;

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_sub(2, 5) == -3);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK_THROWS_AS(checked_add(LLONG_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(LLONG_MIN, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(LLONG_MAX, 2), std::overflow_error);
}

TEST_CASE("choose2 and floor division") {
    for (long long m = 0; m <= 2000; ++m) CHECK(choose2(m) == m * (m - 1) / 2);
    CHECK_THROWS_AS(choose2(-1), std::invalid_argument);
    CHECK(choose2(4000000000LL) > 0);  // would overflow without halving first
    CHECK_THROWS_AS(choose2(10000000000LL), std::overflow_error);

    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-2, 9) == -1);
    CHECK(floor_div(-9, 9) == -1);
    CHECK(floor_div(0, 5) == 0);
    CHECK_THROWS_AS(floor_div(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(floor_div(1, -2), std::invalid_argument);
}

TEST_CASE("ramsey number of a star versus a clique") {
    CHECK(ramsey_star_clique(2, 3) == 5);
    CHECK(ramsey_star_clique(3, 3) == 7);
    CHECK(ramsey_star_clique(2, 2) == 3);
    CHECK(ramsey_star_clique(2, 11) == 21);
    CHECK(ramsey_star_clique(4, 6) == 21);
    CHECK_THROWS_AS(ramsey_star_clique(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(ramsey_star_clique(2, 1), std::invalid_argument);
}

TEST_CASE("restricted size Ramsey closed form") {
    CHECK(rhat_star(2, 3) == 8);    // even k below n: C(5,2) - 2
    CHECK(rhat_star(3, 3) == 18);   // odd k: C(7,2) - C(3,2)
    CHECK(rhat_star(2, 2) == 2);    // k >= n: C(3,2) - C(2,2)
    CHECK(rhat_star(2, 4) == 18);   // C(7,2) - 3
    CHECK(rhat_star(3, 4) == 42);   // C(10,2) - 3
    CHECK(rhat_star(4, 3) == 30);   // C(9,2) - C(4,2)
}

TEST_CASE("large-n closed form agrees with the general one on its domain") {
    CHECK(theorem3_threshold(2) == 20);
    CHECK(theorem3_threshold(3) == 51);
    CHECK(theorem3_threshold(4) == 104);
    CHECK(rhat_theorem3(2, 20) == 722);
    CHECK(rhat_theorem3(3, 51) == 11322);
    CHECK_THROWS_AS(rhat_theorem3(2, 19), std::invalid_argument);
    CHECK_THROWS_AS(rhat_theorem3(3, 48), std::invalid_argument);

    for (long long k = 2; k <= 5; ++k)
        for (long long n = theorem3_threshold(k); n < theorem3_threshold(k) + 60; ++n)
            CHECK(rhat_theorem3(k, n) == rhat_star(k, n));
}

TEST_CASE("surplus threshold f") {
    CHECK(f_threshold(2, 11) == 1);
    CHECK(f_threshold(2, 30) == 5);
    CHECK(f_threshold(2, 9) == 1);
    CHECK(f_threshold(2, 3) == -1);   // floors toward -infinity below the regime
    CHECK(f_threshold(3, 3) == -1);
    CHECK(f_threshold(2, 4) == 0);
}

TEST_CASE("packing edge threshold r-prime") {
    CHECK(r_prime(3, 5) == 4);
    CHECK(r_prime(2, 11) == 11);
    CHECK(r_prime(2, 2) == 2);
    CHECK(r_prime(5, 100) == 11);   // odd k ignores n
    CHECK(r_prime(4, 10) == 19);
}

TEST_CASE("edge-count lower bound for arrowing graphs") {
    CHECK(pikhurko_lower_bound(2, 3) == 4);
    CHECK(pikhurko_lower_bound(3, 4) == 27);
    CHECK(pikhurko_lower_bound(2, 2) == 0);
    CHECK(pikhurko_lower_bound(5, 2) == 0);
    CHECK_THROWS_AS(pikhurko_lower_bound(1, 3), std::invalid_argument);
}

TEST_CASE("asymptotic lower bound") {
    CHECK(erdos_etal_lower_bound(2, 3, 0.5) == doctest::Approx(2.0));
    CHECK(erdos_etal_lower_bound(2, 4, 0.5) == doctest::Approx(2.0));
    CHECK(erdos_etal_lower_bound(4, 6, 0.25) == doctest::Approx(24.0));
    CHECK_THROWS_AS(erdos_etal_lower_bound(2, 3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(erdos_etal_lower_bound(2, 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(erdos_etal_lower_bound(2, 2, 0.5), std::invalid_argument);
}

TEST_CASE("counterexample bound is reported raw") {
    CHECK(pikhurko_counterexample_bound(1) == doctest::Approx(2.0 + std::sqrt(2.0)));

    BoundComparison k6 = compare_counterexample_bound(6);
    CHECK(k6.construction_edges == 63);
    CHECK(k6.counterexample_bound == doctest::Approx(62.7846).epsilon(1e-4));
    CHECK(k6.bound_below_construction);

    // At k = 5 the bound sits above the construction; the comparison must say
    // so rather than smooth it over.
    BoundComparison k5 = compare_counterexample_bound(5);
    CHECK(k5.construction_edges == 45);
    CHECK(k5.counterexample_bound == doctest::Approx(45.8114).epsilon(1e-4));
    CHECK(!k5.bound_below_construction);
}

TEST_CASE("closed form stays within the complete-graph budget") {
    for (long long k = 2; k <= 12; ++k) {
        for (long long n = 2; n <= 12; ++n) {
            CHECK(rhat_star(k, n) <= choose2(ramsey_star_clique(k, n)));
            CHECK(pikhurko_lower_bound(k, n) <= rhat_star(k, n));
        }
    }
}

TEST_CASE("audits over the default grid are violation-free") {
    for (const AuditReport& report : audit_inequalities()) {
        CAPTURE(report.inequality);
        CHECK(report.points_checked > 0);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("audit point counts match the stated ranges") {
    AuditOptions opts;
    opts.k_min = 2;
    opts.k_max = 2;
    opts.window = 3;  // n in {20, 21, 22}

    // t ranges over [0, f(2,n)]: f(2,20)=3, f(2,21)=3, f(2,22)=4 -> 4+4+5.
    CHECK(audit_lemma6_threshold(opts).points_checked == 13);
    // j ranges over [2, n-9]: 10+11+12 points.
    CHECK(audit_case2(opts).points_checked == 33);
    // j ranges over [n-8, n-4]: 3k-1 = 5 points per n.
    CHECK(audit_case3(opts).points_checked == 15);
    CHECK(audit_case4_even(opts).points_checked == 3);
    CHECK(audit_subcase11(opts).points_checked == 6);
    CHECK(audit_subcase12(opts).points_checked == 6);
    CHECK_THROWS_AS(audit_case4_odd(opts), std::invalid_argument);  // no odd k in range

    // The aggregate drops the parity-sliced auditor whose slice is empty.
    auto even_only = audit_inequalities(opts);
    CHECK(even_only.size() == 6);
    for (const AuditReport& report : even_only) {
        CHECK(report.inequality != "case4-odd");
        CHECK(report.points_checked > 0);
    }
    AuditOptions odd_opts{3, 3, 3};
    auto odd_only = audit_inequalities(odd_opts);
    CHECK(odd_only.size() == 6);
    for (const AuditReport& report : odd_only) CHECK(report.inequality != "case4-even");

    AuditOptions empty;
    empty.k_min = 5;
    empty.k_max = 4;
    CHECK_THROWS_AS(audit_case2(empty), std::invalid_argument);
    CHECK_THROWS_AS(audit_inequalities(empty), std::invalid_argument);
}

TEST_CASE("violations record the failing point exactly") {
    // Shrink the window to a regime where nothing fails, then check the JSON
    // round trip preserves reports bit for bit.
    AuditOptions opts;
    opts.k_max = 3;
    opts.window = 5;
    for (const AuditReport& report : audit_inequalities(opts)) {
        AuditReport back = audit_report_from_json(audit_report_to_json(report));
        CHECK(back.inequality == report.inequality);
        CHECK(back.grid == report.grid);
        CHECK(back.points_checked == report.points_checked);
        CHECK(back.violations.size() == report.violations.size());
    }

    // A synthetic report with violations round-trips losslessly too.
    AuditReport synthetic;
    synthetic.inequality = "case2";
    synthetic.grid = "k in [2, 2], n in [20, 20], j in [2, 2]";
    synthetic.points_checked = 1;
    synthetic.violations.push_back({{{"k", 2}, {"n", 20}, {"j", 2}}, "-3/2", "0"});
    AuditReport back = audit_report_from_json(audit_report_to_json(synthetic));
    CHECK(back.violations.size() == 1);
    CHECK(back.violations[0].point == synthetic.violations[0].point);
    CHECK(back.violations[0].lhs == "-3/2");
    CHECK(back.violations[0].rhs == "0");
}
