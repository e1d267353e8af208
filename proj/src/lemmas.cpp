#include "starclique/lemmas.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "starclique/formulas.hpp"

namespace starclique {

namespace {

int deg_in(const Graph& g, int v, VertexSet scope) {
    return (g.neighbours(v) & scope).size();
}

bool induces_min_degree_one(const Graph& g, VertexSet x) {
    bool ok = true;
    for_each_vertex(x, [&](int v) {
        if ((g.neighbours(v) & x).empty()) ok = false;
    });
    return ok;
}

// The edges of g[scope] as lowest-first (u, v) pairs. Callers only use this
// on matchings, where the edges are automatically pairwise disjoint.
std::vector<std::pair<int, int>> edges_in_scope(const Graph& g, VertexSet scope) {
    std::vector<std::pair<int, int>> out;
    for_each_vertex(scope, [&](int u) {
        for_each_vertex(g.neighbours(u) & scope, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    });
    return out;
}

VertexSet endpoints_of(const std::vector<std::pair<int, int>>& edges, std::size_t count) {
    if (edges.size() < count) throw std::logic_error("dichotomy: matching too small for the lift");
    VertexSet out;
    for (std::size_t i = 0; i < count; ++i) {
        out.add(edges[i].first);
        out.add(edges[i].second);
    }
    return out;
}

// Induction core on g[alive]. Returns k+1 vertices inducing min degree >= 1,
// or nullopt when g[alive] is a matching. Invariant: e(g[alive]) > C(k,2).
std::optional<VertexSet> dichotomy_search(const Graph& g, VertexSet alive, int k) {
    if (edges_within(g, alive) < choose2(k) + 1)
        throw std::logic_error("dichotomy: edge invariant lost during recursion");

    // A vertex of degree >= k plus k of its neighbours settles it at once.
    std::optional<int> branch_vertex;  // lowest vertex of degree in [2, k-1]
    int max_deg = 0;
    for (int v : alive.to_vector()) {
        int d = deg_in(g, v, alive);
        if (d >= k) {
            VertexSet out = VertexSet::of({v});
            for (int u : (g.neighbours(v) & alive).to_vector()) {
                if (out.size() == k + 1) break;
                out.add(u);
            }
            return out;
        }
        max_deg = std::max(max_deg, d);
        if (d >= 2 && !branch_vertex) branch_vertex = v;
    }
    if (max_deg <= 1) return std::nullopt;  // a matching
    // Some degree lies in [2, k-1], so k = 2 never reaches this point.
    if (k < 3) throw std::logic_error("dichotomy: k = 2 escaped both base cases");

    int v = *branch_vertex;
    VertexSet rest = alive;
    rest.remove(v);
    VertexSet nbrs = g.neighbours(v) & rest;  // >= 2 vertices
    auto sub = dichotomy_search(g, rest, k - 1);

    if (sub) {
        // Lift a k-vertex answer from g - v.
        VertexSet y = *sub;
        if (nbrs.intersects(y)) {
            y.add(v);
            return y;
        }
        auto nv = nbrs.to_vector();
        int v1 = nv[0], v2 = nv[1];
        // Try swapping each y-vertex for {v, v1}; a swap only fails when the
        // dropped vertex was its partner's sole neighbour.
        for (int drop : y.to_vector()) {
            VertexSet x = y;
            x.remove(drop);
            x.add(v);
            x.add(v1);
            if (induces_min_degree_one(g, x)) return x;
        }
        // All swaps failing forces g[y] to be a perfect matching and k even.
        auto pm = edges_in_scope(g, y);
        if (k % 2 != 0 || static_cast<int>(pm.size()) * 2 != y.size())
            throw std::logic_error("dichotomy: swap exhaustion outside the even perfect-matching case");
        VertexSet x = endpoints_of(pm, static_cast<std::size_t>(k - 2) / 2);
        x.add(v);
        x.add(v1);
        x.add(v2);
        return x;
    }

    // g - v is a matching; lift by parity of k.
    auto pm = edges_in_scope(g, rest);
    if (k % 2 == 1) return endpoints_of(pm, static_cast<std::size_t>(k + 1) / 2);
    VertexSet support;
    for (const auto& [a, b] : pm) {
        support.add(a);
        support.add(b);
    }
    VertexSet touching = nbrs & support;
    if (!touching.empty()) {
        // k/2 matching edges, one of them at a neighbour u of v, plus v.
        int u = touching.lowest();
        std::vector<std::pair<int, int>> picked;
        for (const auto& e : pm)
            if (e.first == u || e.second == u) picked.push_back(e);
        for (const auto& e : pm) {
            if (static_cast<int>(picked.size()) == k / 2) break;
            if (e.first != u && e.second != u) picked.push_back(e);
        }
        VertexSet x = endpoints_of(picked, static_cast<std::size_t>(k) / 2);
        x.add(v);
        return x;
    }
    // v's neighbours are all unmatched, so v, v1, v2 extend (k-2)/2 edges.
    auto nv = nbrs.to_vector();
    VertexSet x = endpoints_of(pm, static_cast<std::size_t>(k - 2) / 2);
    x.add(v);
    x.add(nv[0]);
    x.add(nv[1]);
    return x;
}

// Odd k: a matching with more than C(k,2) >= (k+1)/2 edges directly yields
// k+1 vertices of degree 1, so the matching verdict never stands.
VertexSet odd_matching_subset(const Graph& g, VertexSet scope, int k) {
    return endpoints_of(edges_in_scope(g, scope), static_cast<std::size_t>(k + 1) / 2);
}

}  // namespace

DichotomyResult mindeg_or_matching(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("mindeg_or_matching: requires k >= 2");
    if (g.edge_count() < choose2(k) + 1)
        throw std::invalid_argument("mindeg_or_matching: needs more than C(k,2) edges");

    auto got = dichotomy_search(g, g.vertices(), k);
    if (!got && k % 2 == 1) got = odd_matching_subset(g, g.vertices(), k);
    if (got) {
        if (got->size() != k + 1 || !induces_min_degree_one(g, *got))
            throw std::logic_error("mindeg_or_matching: produced subset breaks its contract");
        return {DichotomyResult::Kind::mindeg_subset, *got, 0};
    }
    if (!is_matching(g)) throw std::logic_error("mindeg_or_matching: matching verdict on a non-matching");
    return {DichotomyResult::Kind::matching, {}, g.edge_count()};
}

std::optional<VertexSet> oracle_mindeg_subset(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("oracle_mindeg_subset: requires k >= 2");
    if (g.order() > 16) throw std::invalid_argument("oracle_mindeg_subset: order must be <= 16");
    if (k + 1 > g.order()) return std::nullopt;
    // Gosper's hack walks the (k+1)-subsets in increasing mask order.
    std::uint64_t limit = std::uint64_t{1} << g.order();
    std::uint64_t mask = (std::uint64_t{1} << (k + 1)) - 1;
    while (mask < limit) {
        VertexSet x(mask);
        if (induces_min_degree_one(g, x)) return x;
        std::uint64_t c = mask & (~mask + 1), r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return std::nullopt;
}

namespace {

// One part from h[active]: the dichotomy subset, with the odd-k matching
// rescue. Failures surface as errors rather than degraded packings.
VertexSet extract_part(const Graph& h, VertexSet active, int k) {
    if (edges_within(h, active) < choose2(k) + 1)
        throw std::runtime_error("disjoint_packing: too few residual edges to extract a part");
    auto got = dichotomy_search(h, active, k);
    if (!got && k % 2 == 1) got = odd_matching_subset(h, active, k);
    if (!got) throw std::runtime_error("disjoint_packing: residual graph degenerated to a matching");
    return *got;
}

void pack_parts(const Graph& h, int k, int n, VertexSet active, int t,
                std::vector<VertexSet>& parts) {
    long long threshold = checked_add(checked_mul(ramsey_star_clique(k, n), t),
                                      checked_add(choose2(t), r_prime(k, n)));
    if (edges_within(h, active) < threshold)
        throw std::runtime_error("disjoint_packing: residual edges below the recursion threshold");

    if (t == 0) {
        parts.push_back(extract_part(h, active, k));
        return;
    }

    // A vertex of degree >= (k+1)(t+1) survives the deeper rounds with k
    // fresh neighbours to spare; peel it off first when one exists.
    long long cap = static_cast<long long>(k + 1) * (t + 1);
    int big = -1;
    for (int v : active.to_vector()) {
        if (deg_in(h, v, active) >= cap) {
            big = v;
            break;
        }
    }

    std::size_t base = parts.size();
    if (big >= 0) {
        VertexSet rest = active;
        rest.remove(big);
        pack_parts(h, k, n, rest, t - 1, parts);
        VertexSet used;
        for (std::size_t i = base; i < parts.size(); ++i) used = used | parts[i];
        VertexSet fresh = (h.neighbours(big) & rest).minus(used);
        if (fresh.size() < k)
            throw std::runtime_error("disjoint_packing: not enough fresh neighbours to finish a part");
        VertexSet part = VertexSet::of({big});
        for (int u : fresh.to_vector()) {
            if (part.size() == k + 1) break;
            part.add(u);
        }
        parts.push_back(part);
        return;
    }

    // All degrees < (k+1)(t+1): the first t parts cost so few edges that the
    // leftover graph still clears the single-part threshold.
    pack_parts(h, k, n, active, t - 1, parts);
    VertexSet used;
    for (std::size_t i = base; i < parts.size(); ++i) used = used | parts[i];
    VertexSet residual = active.minus(used);
    if (edges_within(h, residual) < r_prime(k, n))
        throw std::runtime_error("disjoint_packing: residual edges below the extraction threshold");
    parts.push_back(extract_part(h, residual, k));
}

}  // namespace

Packing disjoint_packing(const Graph& h, int k, int n, int t) {
    if (k < 2 || n < 2) throw std::invalid_argument("disjoint_packing: requires k >= 2 and n >= 2");
    if (t < 0) throw std::invalid_argument("disjoint_packing: requires t >= 0");
    long long rsc = ramsey_star_clique(k, n);
    if (h.order() != checked_add(rsc, t))
        throw std::invalid_argument("disjoint_packing: order must be k(n-1)+1+t");
    long long threshold = checked_add(checked_mul(rsc, t), checked_add(choose2(t), r_prime(k, n)));
    if (h.edge_count() < threshold)
        throw std::invalid_argument("disjoint_packing: needs at least (k(n-1)+1)t + C(t,2) + r' edges");

    std::vector<VertexSet> parts;
    pack_parts(h, k, n, h.vertices(), t, parts);

    if (static_cast<int>(parts.size()) != t + 1)
        throw std::logic_error("disjoint_packing: wrong number of parts");
    VertexSet seen;
    for (const auto& part : parts) {
        if (part.size() != k + 1 || seen.intersects(part) || !induces_min_degree_one(h, part))
            throw std::logic_error("disjoint_packing: produced parts break their contract");
        seen = seen | part;
    }
    return {std::move(parts)};
}

std::optional<TwoColouring> good_colouring(const Graph& g, int k, int n) {
    if (k < 2 || n < 2) throw std::invalid_argument("good_colouring: requires k >= 2 and n >= 2");
    long long rsc = ramsey_star_clique(k, n);
    long long ell = g.order() - rsc;
    if (ell < 0 || ell > n - 2)
        throw std::invalid_argument("good_colouring: order must be k(n-1)+1+l with 0 <= l <= n-2");

    Graph h = complement(g);
    long long threshold =
        checked_add(checked_mul(rsc, ell), checked_add(choose2(ell), r_prime(k, n)));
    if (h.edge_count() < threshold) return std::nullopt;

    // Groups: l+1 packed parts of size k+1 (each vertex keeps a non-neighbour
    // inside its part) plus n-2-l leftover blocks of size k.
    Packing packing = disjoint_packing(h, k, n, static_cast<int>(ell));
    std::vector<VertexSet> groups = packing.parts;
    VertexSet used;
    for (const auto& part : groups) used = used | part;
    std::vector<int> rest = g.vertices().minus(used).to_vector();
    if (static_cast<long long>(rest.size()) != checked_mul(k, n - 2 - ell))
        throw std::logic_error("good_colouring: leftover vertex count mismatch");
    for (std::size_t i = 0; i < rest.size(); i += k)
        groups.push_back(VertexSet::from_vector({rest.begin() + i, rest.begin() + i + k}));

    std::vector<int> group_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for_each_vertex(groups[gi], [&](int v) { group_of[static_cast<std::size_t>(v)] = gi; });

    // Red inside a group, blue across. Red degrees stay <= k-1: blocks have k
    // vertices, and in a packed part every vertex misses a non-neighbour.
    // Blue cliques take at most one vertex per group, so at most n-1 in all.
    TwoColouring col{g, {}};
    for (const auto& [u, v] : g.edges())
        col.colour.push_back(group_of[static_cast<std::size_t>(u)] ==
                                     group_of[static_cast<std::size_t>(v)]
                                 ? EdgeColour::red
                                 : EdgeColour::blue);
    if (verify_colouring(col, k, n).kind != ColouringVerdict::Kind::good)
        throw std::logic_error("good_colouring: constructed colouring fails verification");
    return col;
}

VertexSet redundant_vertices(const Graph& g, int n) {
    if (n < 2) throw std::invalid_argument("redundant_vertices: requires n >= 2");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.adjacency_row(v);
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (!find_clique_in(rows, g.adjacency_row(v), n - 1)) out.add(v);
    return out;
}

namespace {

// T against B = active \ T: B stays below degree k internally and every
// T-vertex reaches B with >= k edges.
bool peel_layer_valid(const Graph& g, VertexSet active, VertexSet t_side, int k) {
    VertexSet b_side = active.minus(t_side);
    if (b_side.empty()) return false;
    bool ok = true;
    for_each_vertex(b_side, [&](int v) {
        if (deg_in(g, v, b_side) >= k) ok = false;
    });
    for_each_vertex(t_side, [&](int v) {
        if (deg_in(g, v, b_side) < k) ok = false;
    });
    return ok;
}

// Smallest valid T for orders <= 20 by sweeping subsets of the high-degree
// core; greedy-plus-repair beyond that. Valid T lies inside the core because
// its vertices need k edges into B.
std::optional<std::pair<VertexSet, bool>> peel_core(const Graph& g, VertexSet active, int k) {
    std::vector<int> core;
    for (int v : active.to_vector())
        if (deg_in(g, v, active) >= k) core.push_back(v);

    if (active.size() <= 20) {
        for (int s = 0; s <= static_cast<int>(core.size()); ++s) {
            if (s == 0) {
                if (peel_layer_valid(g, active, {}, k)) return {{VertexSet{}, true}};
                continue;
            }
            std::uint64_t limit = std::uint64_t{1} << core.size();
            std::uint64_t mask = (std::uint64_t{1} << s) - 1;
            while (mask < limit) {
                VertexSet t_side;
                for (std::size_t i = 0; i < core.size(); ++i)
                    if ((mask >> i) & 1) t_side.add(core[i]);
                if (peel_layer_valid(g, active, t_side, k)) return {{t_side, true}};
                std::uint64_t c = mask & (~mask + 1), r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        return std::nullopt;
    }

    // Greedy B: admit vertices (low degree first) while B stays below k.
    std::vector<int> order = active.to_vector();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg_in(g, a, active) < deg_in(g, b, active); });
    VertexSet b_side;
    for (int v : order) {
        VertexSet grown = b_side;
        grown.add(v);
        bool fits = true;
        for_each_vertex(grown, [&](int u) {
            if (deg_in(g, u, grown) >= k) fits = false;
        });
        if (fits) b_side = grown;
    }
    // Repair: T-vertices short of k edges into B move into B when they fit.
    VertexSet t_side = active.minus(b_side);
    for (bool changed = true; changed;) {
        changed = false;
        for (int v : t_side.to_vector()) {
            if (deg_in(g, v, b_side) >= k) continue;
            VertexSet grown = b_side;
            grown.add(v);
            bool fits = true;
            for_each_vertex(grown, [&](int u) {
                if (deg_in(g, u, grown) >= k) fits = false;
            });
            if (!fits) continue;
            b_side = grown;
            t_side.remove(v);
            changed = true;
        }
    }
    if (!peel_layer_valid(g, active, t_side, k))
        throw std::runtime_error("peel_T: heuristic failed to separate a valid layer");
    return {{t_side, false}};
}

}  // namespace

std::optional<PeelLayer> peel_T(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("peel_T: requires k >= 2");
    auto got = peel_core(g, g.vertices(), k);
    if (!got) return std::nullopt;
    return PeelLayer{got->first, g.vertices().minus(got->first), 0, got->second};
}

std::vector<PeelLayer> peel_cascade(const Graph& g, int k, int n) {
    if (k < 2) throw std::invalid_argument("peel_cascade: requires k >= 2");
    if (n < 3) throw std::invalid_argument("peel_cascade: requires n >= 3");
    std::vector<PeelLayer> layers;
    VertexSet active = g.vertices();
    for (long long i = 1;; ++i) {
        auto got = peel_core(g, active, k);
        if (!got || got->first.empty()) break;
        PeelLayer layer;
        layer.t_side = got->first;
        layer.b_side = active.minus(got->first);
        layer.surplus = layer.t_side.size() - checked_add(checked_mul(k, n - i - 1), 1);
        layer.minimal = got->second;
        layers.push_back(layer);
        active = layer.t_side;
        long long floor_i = std::max<long long>(0, f_threshold(k, n - i));
        if (layer.surplus <= floor_i || i + 1 > n - 3) break;
    }
    return layers;
}

namespace {

nlohmann::json vertices_json(VertexSet s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

}  // namespace

nlohmann::json dichotomy_to_json(const DichotomyResult& r) {
    if (r.kind == DichotomyResult::Kind::matching)
        return {{"kind", "matching"}, {"matching_size", r.matching_size}};
    return {{"kind", "mindeg_subset"}, {"subset", vertices_json(r.subset)}};
}

namespace {

VertexSet vertices_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array())
        throw std::invalid_argument(std::string(what) + ": expected a vertex array");
    VertexSet s;
    for (const auto& e : arr) {
        int v = e.get<int>();
        if (v < 0 || v >= Graph::max_order || s.contains(v))
            throw std::invalid_argument(std::string(what) + ": bad vertex " + std::to_string(v));
        s.add(v);
    }
    return s;
}

}  // namespace

DichotomyResult dichotomy_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "matching")
        return {DichotomyResult::Kind::matching, {}, j.at("matching_size").get<long long>()};
    if (kind == "mindeg_subset")
        return {DichotomyResult::Kind::mindeg_subset,
                vertices_from_json(j.at("subset"), "dichotomy_from_json"), 0};
    throw std::invalid_argument("dichotomy_from_json: unknown kind " + kind);
}

nlohmann::json packing_to_json(const Packing& p) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : p.parts) parts.push_back(vertices_json(part));
    return {{"parts", parts}};
}

Packing packing_from_json(const nlohmann::json& j) {
    const auto& arr = j.at("parts");
    if (!arr.is_array()) throw std::invalid_argument("packing_from_json: parts must be an array");
    Packing p;
    VertexSet seen;
    for (const auto& e : arr) {
        VertexSet part = vertices_from_json(e, "packing_from_json");
        if (seen.intersects(part))
            throw std::invalid_argument("packing_from_json: parts overlap");
        seen = seen | part;
        p.parts.push_back(part);
    }
    return p;
}

nlohmann::json peel_layer_to_json(const PeelLayer& layer) {
    return {{"t", vertices_json(layer.t_side)},
            {"b", vertices_json(layer.b_side)},
            {"surplus", layer.surplus},
            {"minimal", layer.minimal}};
}

PeelLayer peel_layer_from_json(const nlohmann::json& j) {
    PeelLayer layer;
    layer.t_side = vertices_from_json(j.at("t"), "peel_layer_from_json");
    layer.b_side = vertices_from_json(j.at("b"), "peel_layer_from_json");
    if (layer.t_side.intersects(layer.b_side))
        throw std::invalid_argument("peel_layer_from_json: sides overlap");
    layer.surplus = j.at("surplus").get<long long>();
    layer.minimal = j.at("minimal").get<bool>();
    return layer;
}

}  // namespace starclique
