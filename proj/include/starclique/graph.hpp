#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starclique {

// A set of vertex indices 0..63, stored as one bit per vertex.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet full(int n);
    static VertexSet of(std::initializer_list<int> vs);
    static VertexSet from_vector(const std::vector<int>& vs);

    bool contains(int v) const { return (bits_ >> v) & std::uint64_t{1}; }
    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    // Lowest set index, or -1 when empty.
    int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    std::vector<int> to_vector() const;

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    std::uint64_t bits = s.bits();
    while (bits) {
        f(std::countr_zero(bits));
        bits &= bits - 1;
    }
}

// Undirected simple graph on 1..64 vertices. Adjacency is kept as one
// 64-bit row per vertex; no self-loops, rows stay symmetric.
class Graph {
public:
    static constexpr int max_order = 64;

    explicit Graph(int order);

    static Graph complete(int order);
    static Graph edgeless(int order);
    static Graph path(int order);
    static Graph cycle(int order);
    static Graph star(int leaves);  // K_{1,leaves}; vertex 0 is the centre
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return order_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & std::uint64_t{1}; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    VertexSet neighbours(int v) const { return VertexSet(adj_[v]); }
    std::uint64_t adjacency_row(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertices() const { return VertexSet::full(order_); }

    // All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;  // labelled equality

private:
    int order_;
    int edge_count_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_pair(int u, int v) const;
};

// ---- primitive predicates ------------------------------------------------

Graph complement(const Graph& g);
Graph induced(const Graph& g, VertexSet x);  // rejects empty x
Graph disjoint_union(const Graph& a, const Graph& b);

int max_degree(const Graph& g);
int min_degree(const Graph& g);
std::vector<int> degrees(const Graph& g);
bool is_matching(const Graph& g);  // max degree <= 1

// Number of edges of g with both ends in x / one end in a and one in b.
int edges_within(const Graph& g, VertexSet x);
int edges_between(const Graph& g, VertexSet a, VertexSet b);

// Clique search over adjacency rows restricted to `candidates`. Returns a
// set of n pairwise adjacent vertices, or nullopt. n = 0 yields the empty
// clique, which always exists; callers use that degenerate case on purpose.
std::optional<VertexSet> find_clique_in(const std::vector<std::uint64_t>& rows,
                                        std::uint64_t candidates, int n);
std::optional<VertexSet> find_clique(const Graph& g, int n);
bool contains_clique(const Graph& g, int n);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

// Relabelling: perm[old] = new position; result order unchanged.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// ---- I/O -------------------------------------------------------------------

// graph6: 6-bit big-endian encoding of the upper triangle, printable offset 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain edge list: first line "p <order> <edges>", then one "u v" per line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

enum class GraphFormat { autodetect, graph6, edge_list };
Graph read_graph(const std::string& text, GraphFormat fmt = GraphFormat::autodetect);

// ---- canonicalization ------------------------------------------------------

// Canonical certificate: the graph6 string of a canonical relabelling.
// Two graphs get equal certificates iff they are isomorphic.
std::string canonical_form(const Graph& g);

// Reference canonicalizer minimising over all order! permutations (order <= 8).
// Induces the same equivalence relation as canonical_form; used to cross-check.
std::string canonical_form_exhaustive(const Graph& g);

// ---- enumeration -----------------------------------------------------------

// One representative per isomorphism class with at most max_edges edges,
// ascending by edge count, grown edge-by-edge with canonical-form dedup.
// Representatives carry no isolated vertices (adding isolated vertices never
// changes arrowing); with no_isolated = false the single-vertex graph is also
// emitted, but isolated-padded copies of other classes are not.
class GraphEnumerator {
public:
    static constexpr int default_ceiling = 12;

    GraphEnumerator(int max_edges, bool connected_only, bool no_isolated,
                    int ceiling = default_ceiling);

    std::optional<Graph> next();

private:
    int max_edges_;
    bool connected_only_;
    bool no_isolated_;
    int level_ = 0;
    std::size_t index_ = 0;
    bool emitted_k1_ = false;
    std::vector<Graph> current_;

    void build_next_level();
};

// All isomorphism classes on exactly `order` vertices (isolated vertices
// allowed) with at most max_edges edges, ascending by edge count.
class FixedOrderEnumerator {
public:
    FixedOrderEnumerator(int order, int max_edges);

    std::optional<Graph> next();

private:
    int order_;
    int max_edges_;
    int level_ = -1;
    std::size_t index_ = 0;
    std::vector<Graph> current_;

    void build_next_level();
};

}  // namespace starclique
