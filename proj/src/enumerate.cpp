#include "starclique/graph.hpp"

#include <set>
#include <stdexcept>

namespace starclique {

// Levels are closed under the three growth moves: any graph with m+1 edges and
// no isolated vertex turns into a valid parent by deleting one edge and
// dropping endpoints that become isolated. Deleting an edge between vertices
// of degree >= 2 inverts move (a), a leaf edge inverts (b), and an isolated
// edge inverts (c), so growing every level-m representative by all three moves
// reaches every class at level m+1.
GraphEnumerator::GraphEnumerator(int max_edges, bool connected_only, bool no_isolated, int ceiling)
    : max_edges_(max_edges), connected_only_(connected_only), no_isolated_(no_isolated) {
    if (ceiling < 0) throw std::invalid_argument("enumerate: negative ceiling");
    if (max_edges < 0 || max_edges > ceiling)
        throw std::invalid_argument("enumerate: max_edges must be within 0.." + std::to_string(ceiling));
}

void GraphEnumerator::build_next_level() {
    std::set<std::string> seen;
    if (level_ == 0) {
        seen.insert(canonical_form(Graph::path(2)));
    } else {
        for (const Graph& g : current_) {
            const int order = g.order();
            for (int u = 0; u < order; ++u) {
                for (int v = u + 1; v < order; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Graph h = g;
                    h.add_edge(u, v);
                    seen.insert(canonical_form(h));
                }
            }
            if (order < Graph::max_order) {
                for (int u = 0; u < order; ++u) {
                    Graph h(order + 1);
                    for (auto [a, b] : g.edges()) h.add_edge(a, b);
                    h.add_edge(u, order);
                    seen.insert(canonical_form(h));
                }
            }
            if (order + 2 <= Graph::max_order)
                seen.insert(canonical_form(disjoint_union(g, Graph::path(2))));
        }
    }
    current_.clear();
    current_.reserve(seen.size());
    for (const std::string& cert : seen) current_.push_back(from_graph6(cert));
    ++level_;
    index_ = 0;
}

std::optional<Graph> GraphEnumerator::next() {
    if (!emitted_k1_) {
        emitted_k1_ = true;
        if (!no_isolated_) return Graph(1);
    }
    for (;;) {
        while (index_ < current_.size()) {
            const Graph& g = current_[index_++];
            if (connected_only_ && !is_connected(g)) continue;
            return g;
        }
        if (level_ >= max_edges_) return std::nullopt;
        build_next_level();
    }
}

FixedOrderEnumerator::FixedOrderEnumerator(int order, int max_edges)
    : order_(order), max_edges_(max_edges) {
    if (order < 1 || order > 8)
        throw std::invalid_argument("fixed-order enumerate: order must be 1..8");
    const int all = order * (order - 1) / 2;
    if (max_edges < 0) throw std::invalid_argument("fixed-order enumerate: negative max_edges");
    if (max_edges_ > all) max_edges_ = all;
}

void FixedOrderEnumerator::build_next_level() {
    std::set<std::string> seen;
    if (level_ < 0) {
        seen.insert(canonical_form(Graph::edgeless(order_)));
    } else {
        for (const Graph& g : current_) {
            for (int u = 0; u < order_; ++u) {
                for (int v = u + 1; v < order_; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Graph h = g;
                    h.add_edge(u, v);
                    seen.insert(canonical_form(h));
                }
            }
        }
    }
    current_.clear();
    current_.reserve(seen.size());
    for (const std::string& cert : seen) current_.push_back(from_graph6(cert));
    ++level_;
    index_ = 0;
}

std::optional<Graph> FixedOrderEnumerator::next() {
    for (;;) {
        if (level_ >= 0 && index_ < current_.size()) return current_[index_++];
        if (level_ >= max_edges_) return std::nullopt;
        build_next_level();
    }
}

}  // namespace starclique
