#pragma once

#include "starclique/graph.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace starclique {

enum class EdgeColour : std::uint8_t { red, blue };

// An edge 2-colouring of a host graph; colour[i] matches host.edges()[i].
struct TwoColouring {
    Graph host;
    std::vector<EdgeColour> colour;

    Graph red_subgraph() const;
    Graph blue_subgraph() const;
};

// A colouring is good (for K_{1,k} vs K_n) when the red graph has max degree
// at most k-1 and the blue graph has no K_n.
struct ColouringVerdict {
    enum class Kind { good, red_star, blue_clique };
    Kind kind = Kind::good;
    // red_star: the centre plus k red neighbours; blue_clique: the n clique
    // vertices. Empty for good.
    VertexSet witness;
};

ColouringVerdict verify_colouring(const TwoColouring& c, int k, int n);

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t colourings_ruled_out = 0;  // weighted by 2^(undecided edges)
    int components_searched = 0;
};

struct ArrowOptions {
    int edge_budget = 32;  // per-component ceiling for the exhaustive search
};

// Decision for "every 2-colouring of f contains a red K_{1,k} or a blue K_n".
// budget_exceeded is a first-class outcome: no in-budget component arrows and
// at least one component is too large to exhaust, so no verdict is sound.
struct ArrowDecision {
    enum class Status { arrows, does_not_arrow, budget_exceeded };
    Status status;
    std::optional<TwoColouring> certificate;  // a good colouring of f, when does_not_arrow
    SearchStats stats;
};

ArrowDecision arrows(const Graph& f, int k, int n, const ArrowOptions& opts = {});

// Oracle: tries all 2^e colourings outright. Rejects e(f) > 20.
bool brute_force_arrows(const Graph& f, int k, int n);

// Checks that `embedding` maps f_small injectively onto a subgraph of f_big
// (edges to edges). Such a map transports arrowing upward.
bool is_subgraph_monotone_witness(const Graph& f_small, const Graph& f_big,
                                  const std::vector<int>& embedding);

nlohmann::json colouring_to_json(const TwoColouring& c);
TwoColouring colouring_from_json(const nlohmann::json& j);

}  // namespace starclique
