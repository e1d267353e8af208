#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starclique/search.hpp"

using namespace starclique;

TEST_CASE("construction joins a clique to an independent set") {
    Graph g2 = erdos_graph(2);
    CHECK(g2.order() == 5);
    CHECK(g2.edge_count() == 9);
    // Vertices 0..k induce K_{k+1}; k+1..2k are pairwise non-adjacent.
    CHECK(edges_within(g2, VertexSet::of({0, 1, 2})) == 3);
    CHECK(edges_within(g2, VertexSet::of({3, 4})) == 0);
    CHECK(g2.adjacent(0, 3));
    CHECK(g2.adjacent(2, 4));

    Graph g3 = erdos_graph(3);
    CHECK(g3.order() == 7);
    CHECK(g3.edge_count() == 18);
    CHECK(g3.edge_count() == choose2(7) - choose2(3));

    CHECK_THROWS_AS(erdos_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(erdos_graph(32), std::invalid_argument);  // 2k+1 = 65
}

TEST_CASE("construction arrows its target") {
    CHECK(brute_force_arrows(erdos_graph(2), 2, 3));
    auto d2 = arrows(erdos_graph(2), 2, 3);
    CHECK(d2.status == ArrowDecision::Status::arrows);
    auto d3 = arrows(erdos_graph(3), 3, 3);
    CHECK(d3.status == ArrowDecision::Status::arrows);
}

TEST_CASE("closed-form minimiser construction") {
    // (2,3): K_5 minus a perfect matching on 4 vertices, 8 edges.
    Graph c23 = extremal_candidate({2, 3});
    CHECK(c23.order() == 5);
    CHECK(c23.edge_count() == 8);
    Graph k5_minus_pm = Graph::complete(5);
    k5_minus_pm.remove_edge(0, 1);
    k5_minus_pm.remove_edge(2, 3);
    CHECK(canonical_form(c23) == canonical_form(k5_minus_pm));

    // (3,3): k >= n branch removes E(K_3), landing on the join construction.
    Graph c33 = extremal_candidate({3, 3});
    CHECK(c33.edge_count() == 18);
    CHECK(canonical_form(c33) == canonical_form(erdos_graph(3)));

    // (2,2): K_3 minus one matching edge is a path.
    Graph c22 = extremal_candidate({2, 2});
    CHECK(c22.order() == 3);
    CHECK(c22.edge_count() == 2);

    CHECK_THROWS_AS(extremal_candidate({2, 33}), std::invalid_argument);  // 65 vertices
    CHECK_THROWS_AS(extremal_candidate({1, 3}), std::invalid_argument);
}

TEST_CASE("construction edge counts match the closed form") {
    for (long long k = 2; k <= 10; ++k)
        for (long long n = 2; n <= 10; ++n) {
            if (ramsey_star_clique(k, n) > 64) continue;
            CHECK(extremal_candidate({k, n}).edge_count() == rhat_star(k, n));
        }
}

TEST_CASE("construction arrows wherever the engine can check it") {
    for (long long k = 2; k <= 6; ++k)
        for (long long n = 2; n <= 4; ++n) {
            if (ramsey_star_clique(k, n) > 7) continue;
            Graph c = extremal_candidate({k, n});
            auto d = arrows(c, static_cast<int>(k), static_cast<int>(n));
            CHECK(d.status == ArrowDecision::Status::arrows);
        }
}

TEST_CASE("restricted minimum on feasible instances") {
    auto r23 = compute_rhat_star({2, 3});
    CHECK(r23.value == 8);
    CHECK(r23.exact);
    CHECK(r23.lower_bound == 8);
    REQUIRE(r23.witness.has_value());
    CHECK(r23.witness->edge_count() == 8);
    CHECK(arrows(*r23.witness, 2, 3).status == ArrowDecision::Status::arrows);
    CHECK(!r23.exhausted.empty());

    auto r22 = compute_rhat_star({2, 2});
    CHECK(r22.value == 2);
    CHECK(r22.exact);

    auto r32 = compute_rhat_star({3, 2});
    CHECK(r32.value == 3);
    CHECK(r32.exact);

    auto r33 = compute_rhat_star({3, 3}, SearchOptions{32, 12, 2});
    CHECK(r33.value == 18);
    CHECK(r33.exact);
    REQUIRE(r33.witness.has_value());
    CHECK(r33.witness->edge_count() == 18);

    CHECK_THROWS_AS(compute_rhat_star({2, 5}), std::invalid_argument);  // 9 vertices
    CHECK_THROWS_AS(compute_rhat_star({4, 3}), std::invalid_argument);  // 9 vertices
}

TEST_CASE("restricted search degrades to bounds under a starved budget") {
    auto r = compute_rhat_star({2, 3}, SearchOptions{7, 12, 1});
    CHECK(!r.exact);
    CHECK(r.lower_bound == 8);
    CHECK(r.value == 10);  // K_5 via the Ramsey identity
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->edge_count() == 10);
    CHECK(r.exhausted.find("budget") != std::string::npos);
}

TEST_CASE("restricted search is thread-count invariant") {
    auto one = compute_rhat_star({2, 3}, SearchOptions{32, 12, 1});
    auto four = compute_rhat_star({2, 3}, SearchOptions{32, 12, 4});
    CHECK(one.value == four.value);
    CHECK(one.exact == four.exact);
    CHECK(to_graph6(*one.witness) == to_graph6(*four.witness));
    CHECK(one.exhausted == four.exhausted);
}

TEST_CASE("unrestricted minimum") {
    auto r23 = compute_rhat({2, 3});
    CHECK(r23.value == 8);
    CHECK(r23.exact);
    CHECK(r23.lower_bound == 8);
    REQUIRE(r23.witness.has_value());
    CHECK(r23.witness->edge_count() == 8);

    auto r22 = compute_rhat({2, 2});
    CHECK(r22.value == 2);
    CHECK(r22.exact);

    // (3,3) needs 17-edge exhaustion, beyond the default ceiling: certified
    // bounds only, witness from the construction.
    auto r33 = compute_rhat({3, 3});
    CHECK(r33.value == 18);
    CHECK(!r33.exact);
    CHECK(r33.lower_bound == pikhurko_lower_bound(3, 3));
    REQUIRE(r33.witness.has_value());
    CHECK(r33.witness->edge_count() == 18);
    CHECK(r33.exhausted.find("ceiling") != std::string::npos);
}

TEST_CASE("gap report over the desk-scale window") {
    GapReport rep = conjecture_gap_report(3, 3);
    REQUIRE(rep.rows.size() == 4);
    CHECK(!rep.limitation_note.empty());

    auto row = [&](long long k, long long n) -> const GapRow& {
        for (const auto& r : rep.rows)
            if (r.k == k && r.n == n) return r;
        throw std::logic_error("row missing");
    };

    const GapRow& r22 = row(2, 2);
    CHECK(r22.rhat == 2);
    CHECK(r22.rhat_star == 2);
    CHECK(r22.closed_form == 2);
    CHECK(r22.exact);
    CHECK(r22.agree == true);
    CHECK(!r22.witness_graph6.empty());

    const GapRow& r23 = row(2, 3);
    CHECK(r23.rhat == 8);
    CHECK(r23.rhat_star == 8);
    CHECK(r23.closed_form == 8);
    CHECK(r23.exact);
    CHECK(r23.agree == true);

    const GapRow& r32 = row(3, 2);
    CHECK(r32.rhat == 3);
    CHECK(r32.rhat_star == 3);
    CHECK(r32.exact);

    // (3,3): restricted search lands exactly; the unrestricted one stays a
    // bound pair, so the row is inexact with no agreement verdict.
    const GapRow& r33 = row(3, 3);
    CHECK(!r33.rhat.has_value());
    CHECK(r33.rhat_star == 18);
    CHECK(r33.closed_form == 18);
    CHECK(!r33.exact);
    CHECK(!r33.agree.has_value());

    CHECK_THROWS_AS(conjecture_gap_report(1, 3), std::invalid_argument);
}

TEST_CASE("search JSON shapes") {
    nlohmann::json ej = exact_result_to_json(compute_rhat_star({2, 3}));
    CHECK(ej["k"] == 2);
    CHECK(ej["n"] == 3);
    CHECK(ej["value"] == 8);
    CHECK(ej["exact"] == true);
    CHECK(ej["lower_bound"] == 8);
    CHECK(ej["witness"].is_string());
    CHECK(from_graph6(ej["witness"].get<std::string>()).edge_count() == 8);
    CHECK(ej["exhausted"].is_string());

    nlohmann::json gj = gap_report_to_json(conjecture_gap_report(2, 3));
    REQUIRE(gj["rows"].size() == 2);
    CHECK(gj["limitation"].is_string());
    const auto& row = gj["rows"][1];  // (2,3)
    CHECK(row["k"] == 2);
    CHECK(row["n"] == 3);
    CHECK(row["rhat"] == 8);
    CHECK(row["rhat_star"] == 8);
    CHECK(row["closed_form"] == 8);
    CHECK(row["agree"] == true);
}

TEST_CASE("search JSON round trips") {
    nlohmann::json exact = exact_result_to_json(compute_rhat_star({2, 3}));
    CHECK(exact_result_to_json(exact_result_from_json(exact)) == exact);

    nlohmann::json starved =
        exact_result_to_json(compute_rhat_star({2, 3}, SearchOptions{7, 12, 1}));
    CHECK(starved["witness"].is_string());
    CHECK(exact_result_to_json(exact_result_from_json(starved)) == starved);

    nlohmann::json bounds = exact_result_to_json(compute_rhat({3, 3}));
    CHECK(exact_result_to_json(exact_result_from_json(bounds)) == bounds);

    nlohmann::json gap = gap_report_to_json(conjecture_gap_report(3, 3));
    CHECK(gap_report_to_json(gap_report_from_json(gap)) == gap);
}
