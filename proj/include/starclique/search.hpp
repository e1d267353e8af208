#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "starclique/arrowing.hpp"
#include "starclique/formulas.hpp"
#include "starclique/graph.hpp"

namespace starclique {

// K_{k+1} joined to an independent set of k vertices: 2k+1 vertices,
// C(2k+1,2) - C(k,2) edges, and every edge 2-colouring yields a red K_{1,k}
// or a blue triangle.
Graph erdos_graph(int k);

// Closed-form minimiser on k(n-1)+1 vertices: K_R minus E(K_k) when k >= n or
// k is odd, else K_R minus a perfect matching on R-1 vertices.
Graph extremal_candidate(const Params& p);

// Outcome of an exhaustive minimum-edge search. When exact, value is the
// minimum and lower_bound == value; otherwise value is the best certified
// upper bound and lower_bound the best certified lower bound.
struct ExactResult {
    Params params{};
    long long value = 0;
    bool exact = false;
    long long lower_bound = 0;
    std::optional<Graph> witness;  // an arrowing graph with value edges
    std::string exhausted;         // what the search certified, and why it suffices
};

struct SearchOptions {
    int engine_budget = 32;  // per-component edge budget inside arrows()
    int max_edges = 12;      // enumeration ceiling for compute_rhat
    int threads = 1;
};

// Minimum edges over subgraphs of K_{k(n-1)+1}; feasible for k(n-1)+1 <= 7.
ExactResult compute_rhat_star(const Params& p, const SearchOptions& opts = {});

// Minimum edges over all graphs. Exhausts connected isomorphism classes
// without isolated vertices below the verified construction, which suffices
// because a graph arrows exactly when one of its components does. Degrades to
// certified bounds when the construction exceeds the enumeration ceiling.
ExactResult compute_rhat(const Params& p, const SearchOptions& opts = {});

struct GapRow {
    long long k = 0;
    long long n = 0;
    std::optional<long long> rhat;       // exact values only
    std::optional<long long> rhat_star;  // exact values only
    long long closed_form = 0;
    bool exact = false;                  // both minima pinned exactly
    std::optional<bool> agree;           // rhat == rhat_star, when both known
    std::string witness_graph6;          // empty when not computed
};

struct GapReport {
    std::vector<GapRow> rows;
    std::string limitation_note;
};

// Desk-scale sweep of both minima against the closed form for
// 2 <= k <= k_max, 2 <= n <= n_max; infeasible entries stay null.
GapReport conjecture_gap_report(long long k_max, long long n_max,
                                const SearchOptions& opts = {});

nlohmann::json exact_result_to_json(const ExactResult& r);
ExactResult exact_result_from_json(const nlohmann::json& j);
nlohmann::json gap_report_to_json(const GapReport& report);
GapReport gap_report_from_json(const nlohmann::json& j);

}  // namespace starclique
