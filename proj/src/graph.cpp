#include "starclique/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starclique {

VertexSet VertexSet::full(int n) {
    if (n < 0 || n > Graph::max_order) throw std::invalid_argument("VertexSet::full: bad size");
    if (n == 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << n) - 1);
}

VertexSet VertexSet::of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::from_vector(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each_vertex(*this, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int order) : order_(order), adj_(static_cast<std::size_t>(order), 0) {
    if (order < 1 || order > max_order) throw std::invalid_argument("Graph: order must be 1..64");
}

Graph Graph::complete(int order) {
    Graph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::edgeless(int order) { return Graph(order); }

Graph Graph::path(int order) {
    Graph g(order);
    for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int order) {
    if (order < 3) throw std::invalid_argument("cycle: order must be >= 3");
    Graph g = path(order);
    g.add_edge(order - 1, 0);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
        throw std::invalid_argument("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    if (adjacent(u, v)) return;
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    if (!adjacent(u, v)) return;
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
    --edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            out.emplace_back(u, std::countr_zero(higher));
            higher &= higher - 1;
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

Graph induced(const Graph& g, VertexSet x) {
    if (x.empty()) throw std::invalid_argument("induced: empty vertex set");
    if (!x.is_subset_of(g.vertices())) throw std::invalid_argument("induced: set not within graph");
    const std::vector<int> verts = x.to_vector();
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::max_order)
        throw std::invalid_argument("disjoint_union: order overflow");
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g) {
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

bool is_matching(const Graph& g) { return max_degree(g) <= 1; }

int edges_within(const Graph& g, VertexSet x) {
    int twice = 0;
    for_each_vertex(x, [&](int v) { twice += std::popcount(g.adjacency_row(v) & x.bits()); });
    return twice / 2;
}

int edges_between(const Graph& g, VertexSet a, VertexSet b) {
    if (a.intersects(b)) throw std::invalid_argument("edges_between: sets overlap");
    int count = 0;
    for_each_vertex(a, [&](int v) { count += std::popcount(g.adjacency_row(v) & b.bits()); });
    return count;
}

namespace {

bool clique_search(const std::vector<std::uint64_t>& rows, std::uint64_t candidates, int need,
                   std::uint64_t chosen, std::uint64_t& out) {
    if (need == 0) {
        out = chosen;
        return true;
    }
    while (candidates) {
        if (std::popcount(candidates) < need) return false;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (clique_search(rows, candidates & rows[static_cast<std::size_t>(v)], need - 1,
                          chosen | (std::uint64_t{1} << v), out))
            return true;
    }
    return false;
}

}  // namespace

std::optional<VertexSet> find_clique_in(const std::vector<std::uint64_t>& rows,
                                        std::uint64_t candidates, int n) {
    if (n < 0) throw std::invalid_argument("find_clique_in: n must be >= 0");
    std::uint64_t out = 0;  // n = 0 finds the empty clique
    if (clique_search(rows, candidates, n, 0, out)) return VertexSet(out);
    return std::nullopt;
}

std::optional<VertexSet> find_clique(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("find_clique: n must be >= 1");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.adjacency_row(v);
    return find_clique_in(rows, g.vertices().bits(), n);
}

bool contains_clique(const Graph& g, int n) { return find_clique(g, n).has_value(); }

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::uint64_t unseen = g.vertices().bits();
    while (unseen) {
        std::uint64_t comp = std::uint64_t{1} << std::countr_zero(unseen);
        for (;;) {
            std::uint64_t frontier = 0;
            std::uint64_t scan = comp;
            while (scan) {
                frontier |= g.adjacency_row(std::countr_zero(scan));
                scan &= scan - 1;
            }
            if ((frontier | comp) == comp) break;
            comp |= frontier;
        }
        comps.emplace_back(comp);
        unseen &= ~comp;
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= g.order() || hit[static_cast<std::size_t>(p)])
            throw std::invalid_argument("relabel: not a permutation");
        hit[static_cast<std::size_t>(p)] = true;
    }
    Graph h(g.order());
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

// ---- graph6 ----------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // N(n) = '~' followed by three 6-bit groups, big-endian.
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(const std::string& s) {
    std::size_t pos = 0;
    if (s.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= s.size()) throw std::invalid_argument("graph6: empty input");

    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        const int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };

    int n;
    if (s[pos] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw std::invalid_argument("graph6: order beyond 64 unsupported");
        n = (next() << 12) | (next() << 6) | next();
    } else {
        n = next();
    }
    if (n < 1 || n > Graph::max_order)
        throw std::invalid_argument("graph6: order must be 1..64");

    Graph g(n);
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            if ((value >> --bits) & 1) g.add_edge(u, v);
        }
    }
    while (pos < s.size()) {
        const char c = s[pos++];
        if (c != '\n' && c != '\r')
            throw std::invalid_argument("graph6: trailing characters");
    }
    return g;
}

// ---- edge-list format --------------------------------------------------------

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int order = 0, count = 0;
    if (!(in >> tag) || tag != "p" || !(in >> order >> count))
        throw std::invalid_argument("edge list: expected header \"p <order> <edges>\"");
    if (order < 1 || order > Graph::max_order)
        throw std::invalid_argument("edge list: order must be 1..64");
    Graph g(order);
    int u, v;
    while (in >> u >> v) {
        if (g.adjacent(u, v)) throw std::invalid_argument("edge list: duplicate edge");
        g.add_edge(u, v);
    }
    if (!in.eof()) {
        in.clear();
        std::string rest;
        in >> rest;
        if (!rest.empty()) throw std::invalid_argument("edge list: malformed line");
    }
    if (g.edge_count() != count)
        throw std::invalid_argument("edge list: edge count does not match header");
    return g;
}

Graph read_graph(const std::string& text, GraphFormat fmt) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw std::invalid_argument("read_graph: empty input");
    std::size_t end = text.find_last_not_of(" \t\r\n");
    const std::string body = text.substr(begin, end - begin + 1);

    if (fmt == GraphFormat::edge_list) return from_edge_list(body);
    if (fmt == GraphFormat::graph6) return from_graph6(body);

    // A leading 'p' with a parseable header means edge list; anything else is
    // taken as graph6 (whose first byte for order >= 17 can't be 'p' anyway
    // once the header check fails).
    if (body[0] == 'p') {
        std::istringstream probe(body);
        std::string tag;
        int a, b;
        if (probe >> tag >> a >> b; tag == "p") return from_edge_list(body);
    }
    return from_graph6(body);
}

}  // namespace starclique
