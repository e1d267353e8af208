#include "starclique/arrowing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace starclique {

Graph TwoColouring::red_subgraph() const {
    Graph r(host.order());
    const auto es = host.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (colour[i] == EdgeColour::red) r.add_edge(es[i].first, es[i].second);
    return r;
}

Graph TwoColouring::blue_subgraph() const {
    Graph b(host.order());
    const auto es = host.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (colour[i] == EdgeColour::blue) b.add_edge(es[i].first, es[i].second);
    return b;
}

ColouringVerdict verify_colouring(const TwoColouring& c, int k, int n) {
    if (k < 2 || n < 2) throw std::invalid_argument("verify_colouring: k and n must be >= 2");
    if (c.colour.size() != static_cast<std::size_t>(c.host.edge_count()))
        throw std::invalid_argument("verify_colouring: colour vector does not match edge count");
    const Graph red = c.red_subgraph();
    for (int v = 0; v < red.order(); ++v) {
        if (red.degree(v) >= k) {
            VertexSet witness;
            witness.add(v);
            int taken = 0;
            for_each_vertex(red.neighbours(v), [&](int u) {
                if (taken < k) {
                    witness.add(u);
                    ++taken;
                }
            });
            return {ColouringVerdict::Kind::red_star, witness};
        }
    }
    const Graph blue = c.blue_subgraph();
    if (auto clique = find_clique(blue, n)) return {ColouringVerdict::Kind::blue_clique, *clique};
    return {ColouringVerdict::Kind::good, VertexSet{}};
}

namespace {

constexpr std::uint8_t undecided_c = 0;
constexpr std::uint8_t red_c = 1;
constexpr std::uint8_t blue_c = 2;

struct EngineState {
    std::vector<std::uint8_t> colour;  // per edge
    std::vector<int> red_deg;          // per vertex
    std::vector<std::uint64_t> blue;   // blue adjacency rows
    std::vector<int> und_deg;          // undecided incident edges per vertex
    int undecided = 0;
};

// DPLL-style search for a good colouring of one connected graph. Unit rules:
// a vertex at k-1 red edges forces its undecided edges blue; an undecided
// edge whose endpoints share an all-blue K_{n-2} is forced red. Either rule
// kills half of the remaining extensions, which is what the exhaustion
// accounting records: a conflict rules out 2^undecided colourings, a forced
// edge 2^(undecided-1), and on a fully exhausted search the total comes to
// exactly 2^edges.
class ComponentSearcher {
public:
    ComponentSearcher(const Graph& g, int k, int n, SearchStats& stats)
        : g_(g), k_(k), n_(n), stats_(stats), edges_(g.edges()),
          incident_(static_cast<std::size_t>(g.order())) {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            incident_[static_cast<std::size_t>(edges_[i].first)].push_back(static_cast<int>(i));
            incident_[static_cast<std::size_t>(edges_[i].second)].push_back(static_cast<int>(i));
        }
    }

    std::optional<std::vector<EdgeColour>> find_good() {
        EngineState s;
        s.colour.assign(edges_.size(), undecided_c);
        s.red_deg.assign(static_cast<std::size_t>(g_.order()), 0);
        s.blue.assign(static_cast<std::size_t>(g_.order()), 0);
        s.und_deg.assign(static_cast<std::size_t>(g_.order()), 0);
        for (auto [u, v] : edges_) {
            ++s.und_deg[static_cast<std::size_t>(u)];
            ++s.und_deg[static_cast<std::size_t>(v)];
        }
        s.undecided = static_cast<int>(edges_.size());
        ++stats_.nodes_expanded;
        std::deque<Pending> q;
        if (!propagate(s, q)) return std::nullopt;
        if (dfs(s)) return result_;
        return std::nullopt;
    }

private:
    struct Pending {
        int edge;
        std::uint8_t colour;
        bool forced;
    };

    const Graph& g_;
    int k_, n_;
    SearchStats& stats_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<EdgeColour> result_;

    void conflict(const EngineState& s) {
        ++stats_.conflicts;
        stats_.colourings_ruled_out += std::uint64_t{1} << s.undecided;
    }

    bool blue_completion_exists(const EngineState& s, int u, int v) const {
        const std::uint64_t common =
            s.blue[static_cast<std::size_t>(u)] & s.blue[static_cast<std::size_t>(v)];
        if (std::popcount(common) < n_ - 2) return false;
        return find_clique_in(s.blue, common, n_ - 2).has_value();
    }

    bool propagate(EngineState& s, std::deque<Pending>& q) {
        for (;;) {
            while (!q.empty()) {
                const Pending p = q.front();
                q.pop_front();
                if (s.colour[static_cast<std::size_t>(p.edge)] != undecided_c) {
                    if (s.colour[static_cast<std::size_t>(p.edge)] == p.colour) continue;
                    conflict(s);
                    return false;
                }
                if (p.forced) stats_.colourings_ruled_out += std::uint64_t{1} << (s.undecided - 1);
                s.colour[static_cast<std::size_t>(p.edge)] = p.colour;
                --s.undecided;
                const auto [u, v] = edges_[static_cast<std::size_t>(p.edge)];
                --s.und_deg[static_cast<std::size_t>(u)];
                --s.und_deg[static_cast<std::size_t>(v)];
                if (p.colour == red_c) {
                    for (int w : {u, v}) {
                        if (++s.red_deg[static_cast<std::size_t>(w)] > k_ - 1) {
                            conflict(s);
                            return false;
                        }
                        if (s.red_deg[static_cast<std::size_t>(w)] == k_ - 1) {
                            for (int ei : incident_[static_cast<std::size_t>(w)])
                                if (s.colour[static_cast<std::size_t>(ei)] == undecided_c)
                                    q.push_back({ei, blue_c, true});
                        }
                    }
                } else {
                    s.blue[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                    s.blue[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
                    if (blue_completion_exists(s, u, v)) {
                        conflict(s);
                        return false;
                    }
                }
            }
            bool any = false;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (s.colour[e] != undecided_c) continue;
                const auto [u, v] = edges_[e];
                if (blue_completion_exists(s, u, v)) {
                    q.push_back({static_cast<int>(e), red_c, true});
                    any = true;
                }
            }
            if (!any) return true;
        }
    }

    int pick_branch_edge(const EngineState& s) const {
        int best_v = -1;
        for (int v = 0; v < g_.order(); ++v)
            if (s.und_deg[static_cast<std::size_t>(v)] > 0 &&
                (best_v < 0 || s.und_deg[static_cast<std::size_t>(v)] >
                                   s.und_deg[static_cast<std::size_t>(best_v)]))
                best_v = v;
        int best_edge = -1, best_other = -1;
        for (int ei : incident_[static_cast<std::size_t>(best_v)]) {
            if (s.colour[static_cast<std::size_t>(ei)] != undecided_c) continue;
            const auto [u, v] = edges_[static_cast<std::size_t>(ei)];
            const int w = u == best_v ? v : u;
            if (best_edge < 0 ||
                s.und_deg[static_cast<std::size_t>(w)] > s.und_deg[static_cast<std::size_t>(best_other)] ||
                (s.und_deg[static_cast<std::size_t>(w)] == s.und_deg[static_cast<std::size_t>(best_other)] &&
                 w < best_other)) {
                best_edge = ei;
                best_other = w;
            }
        }
        return best_edge;
    }

    bool dfs(const EngineState& s) {
        if (s.undecided == 0) {
            result_.resize(edges_.size());
            for (std::size_t i = 0; i < edges_.size(); ++i)
                result_[i] = s.colour[i] == red_c ? EdgeColour::red : EdgeColour::blue;
            return true;
        }
        const int e = pick_branch_edge(s);
        for (std::uint8_t c : {blue_c, red_c}) {
            EngineState child = s;
            ++stats_.nodes_expanded;
            std::deque<Pending> q{{e, c, false}};
            if (propagate(child, q) && dfs(child)) return true;
        }
        return false;
    }
};

}  // namespace

// Both K_{1,k} and K_n are connected, so any copy forced in f sits inside one
// component: f arrows iff some component arrows. Components are exhausted in
// ascending edge order; a component above the budget only matters when no
// searched component arrows, in which case no verdict is sound.
ArrowDecision arrows(const Graph& f, int k, int n, const ArrowOptions& opts) {
    if (k < 2 || n < 2) throw std::invalid_argument("arrows: k and n must be >= 2");
    if (opts.edge_budget < 0) throw std::invalid_argument("arrows: negative edge budget");

    ArrowDecision out;
    std::vector<VertexSet> comps = connected_components(f);
    std::stable_sort(comps.begin(), comps.end(), [&](VertexSet a, VertexSet b) {
        return edges_within(f, a) < edges_within(f, b);
    });

    bool oversized = false;
    std::map<std::pair<int, int>, EdgeColour> chosen;
    for (VertexSet comp : comps) {
        const int m = edges_within(f, comp);
        if (m == 0) continue;
        if (m > opts.edge_budget) {
            oversized = true;
            continue;
        }
        const Graph sub = induced(f, comp);
        const std::vector<int> verts = comp.to_vector();
        ComponentSearcher searcher(sub, k, n, out.stats);
        ++out.stats.components_searched;
        const auto colouring = searcher.find_good();
        if (!colouring) {
            out.status = ArrowDecision::Status::arrows;
            return out;
        }
        const auto sub_edges = sub.edges();
        for (std::size_t i = 0; i < sub_edges.size(); ++i)
            chosen[{verts[static_cast<std::size_t>(sub_edges[i].first)],
                    verts[static_cast<std::size_t>(sub_edges[i].second)]}] = (*colouring)[i];
    }
    if (oversized) {
        out.status = ArrowDecision::Status::budget_exceeded;
        return out;
    }

    TwoColouring cert{f, {}};
    cert.colour.reserve(static_cast<std::size_t>(f.edge_count()));
    for (auto e : f.edges()) cert.colour.push_back(chosen.at(e));
    if (verify_colouring(cert, k, n).kind != ColouringVerdict::Kind::good)
        throw std::logic_error("arrows: assembled colouring fails verification");
    out.status = ArrowDecision::Status::does_not_arrow;
    out.certificate = std::move(cert);
    return out;
}

bool brute_force_arrows(const Graph& f, int k, int n) {
    if (k < 2 || n < 2) throw std::invalid_argument("brute_force_arrows: k and n must be >= 2");
    const int m = f.edge_count();
    if (m > 20) throw std::invalid_argument("brute_force_arrows: more than 20 edges");

    const auto edges = f.edges();
    std::vector<std::uint64_t> incident(static_cast<std::size_t>(f.order()), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[static_cast<std::size_t>(edges[i].first)] |= std::uint64_t{1} << i;
        incident[static_cast<std::size_t>(edges[i].second)] |= std::uint64_t{1} << i;
    }
    std::vector<std::uint64_t> base(static_cast<std::size_t>(f.order()));
    for (int v = 0; v < f.order(); ++v) base[static_cast<std::size_t>(v)] = f.adjacency_row(v);

    std::vector<std::uint64_t> rows;
    for (std::uint64_t red = 0; red < (std::uint64_t{1} << m); ++red) {
        bool degrees_ok = true;
        for (int v = 0; v < f.order() && degrees_ok; ++v)
            degrees_ok = std::popcount(red & incident[static_cast<std::size_t>(v)]) <= k - 1;
        if (!degrees_ok) continue;
        rows = base;
        std::uint64_t bits = red;
        while (bits) {
            const auto [u, v] = edges[static_cast<std::size_t>(std::countr_zero(bits))];
            rows[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
            rows[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
            bits &= bits - 1;
        }
        if (!find_clique_in(rows, f.vertices().bits(), n)) return false;  // good colouring
    }
    return true;
}

bool is_subgraph_monotone_witness(const Graph& f_small, const Graph& f_big,
                                  const std::vector<int>& embedding) {
    if (embedding.size() != static_cast<std::size_t>(f_small.order()))
        throw std::invalid_argument("embedding size must equal the small graph's order");
    for (int image : embedding)
        if (image < 0 || image >= f_big.order())
            throw std::invalid_argument("embedding image out of range");
    std::vector<bool> used(static_cast<std::size_t>(f_big.order()), false);
    for (int image : embedding) {
        if (used[static_cast<std::size_t>(image)]) return false;
        used[static_cast<std::size_t>(image)] = true;
    }
    for (auto [u, v] : f_small.edges())
        if (!f_big.adjacent(embedding[static_cast<std::size_t>(u)],
                            embedding[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

nlohmann::json colouring_to_json(const TwoColouring& c) {
    nlohmann::json j;
    j["order"] = c.host.order();
    nlohmann::json edges = nlohmann::json::array();
    const auto es = c.host.edges();
    nlohmann::json red = nlohmann::json::array();
    for (std::size_t i = 0; i < es.size(); ++i) {
        edges.push_back({es[i].first, es[i].second});
        if (c.colour[i] == EdgeColour::red) red.push_back(i);
    }
    j["edges"] = std::move(edges);
    j["red"] = std::move(red);
    return j;
}

TwoColouring colouring_from_json(const nlohmann::json& j) {
    const int order = j.at("order").get<int>();
    Graph host(order);
    std::vector<std::pair<int, int>> listed;
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        if (u > v) std::swap(u, v);
        if (host.adjacent(u, v)) throw std::invalid_argument("colouring json: duplicate edge");
        host.add_edge(u, v);
        listed.emplace_back(u, v);
    }
    std::vector<bool> red_listed(listed.size(), false);
    for (const auto& idx : j.at("red")) {
        const std::size_t i = idx.get<std::size_t>();
        if (i >= listed.size()) throw std::invalid_argument("colouring json: red index out of range");
        red_listed[i] = true;
    }
    std::map<std::pair<int, int>, EdgeColour> by_edge;
    for (std::size_t i = 0; i < listed.size(); ++i)
        by_edge[listed[i]] = red_listed[i] ? EdgeColour::red : EdgeColour::blue;
    TwoColouring c{std::move(host), {}};
    for (auto e : c.host.edges()) c.colour.push_back(by_edge.at(e));
    return c;
}

}  // namespace starclique
