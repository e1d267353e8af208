#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "starclique/arrowing.hpp"
#include "starclique/graph.hpp"

namespace starclique {

// Degree/matching dichotomy: any graph with more than C(k,2) edges either
// contains k+1 vertices inducing minimum degree >= 1, or is itself a
// matching. For odd k the subset branch always wins.
struct DichotomyResult {
    enum class Kind { mindeg_subset, matching };
    Kind kind = Kind::mindeg_subset;
    VertexSet subset;            // populated for mindeg_subset (k+1 vertices)
    long long matching_size = 0; // populated for matching (= e(g))
};

DichotomyResult mindeg_or_matching(const Graph& g, int k);

// Brute-force reference for the subset branch: first (k+1)-subset, in
// combination order, inducing minimum degree >= 1. Orders <= 16 only.
std::optional<VertexSet> oracle_mindeg_subset(const Graph& g, int k);

// t+1 pairwise disjoint (k+1)-sets, each inducing minimum degree >= 1 in h.
struct Packing {
    std::vector<VertexSet> parts;
};

// Requires order(h) = k(n-1)+1+t and e(h) >= (k(n-1)+1)t + C(t,2) + r' where
// r' = C(k,2)+1 for odd k and k(n-1)/2+1 for even k. Extraction peels one
// high-degree vertex per round when possible and otherwise packs in the
// residual graph; every residual threshold is re-checked on the actual edge
// counts, and a failed extraction throws instead of degrading the result.
Packing disjoint_packing(const Graph& h, int k, int n, int t);

// Colours E(g) so that groups of vertices are red inside and blue across:
// the groups are a packing of complement(g) into l+1 parts of size k+1 plus
// n-2-l blocks of size k, which bounds red degrees by k-1 and blue cliques
// by one vertex per group. Requires order(g) = k(n-1)+1+l with 0 <= l <= n-2;
// returns nullopt when complement(g) misses the packing edge threshold.
std::optional<TwoColouring> good_colouring(const Graph& g, int k, int n);

// Vertices contained in no K_n of g, i.e. whose neighbourhood has no K_{n-1}.
VertexSet redundant_vertices(const Graph& g, int n);

// One peeling step: B = V \ T has max degree < k inside B, and every vertex
// of T sends >= k edges into B.
struct PeelLayer {
    VertexSet t_side;
    VertexSet b_side;
    long long surplus = 0;  // |T| - (k(n-i-1)+1) within a cascade; 0 standalone
    bool minimal = true;    // exhaustive search (orders <= 20) minimises |T|
};

// Smallest T (exhaustive for orders <= 20; a greedy T flagged non-minimal
// beyond that), or nullopt when no proper T works.
std::optional<PeelLayer> peel_T(const Graph& g, int k);

// Iterated peeling T_0 = V, T_i = peel(T_{i-1}); records each layer with its
// surplus over k(n-i-1)+1 and stops once the surplus drops to
// max{0, f(k, n-i)}, the step index reaches n-3, or no layer exists.
std::vector<PeelLayer> peel_cascade(const Graph& g, int k, int n);

nlohmann::json dichotomy_to_json(const DichotomyResult& r);
DichotomyResult dichotomy_from_json(const nlohmann::json& j);
nlohmann::json packing_to_json(const Packing& p);
Packing packing_from_json(const nlohmann::json& j);
nlohmann::json peel_layer_to_json(const PeelLayer& layer);
PeelLayer peel_layer_from_json(const nlohmann::json& j);

}  // namespace starclique
