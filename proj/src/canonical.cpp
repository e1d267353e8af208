#include "starclique/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace starclique {

namespace {

// Adjacency code of a labelling: upper-triangle bits in column-major order
// (same pair order as graph6), packed MSB-first so vector<uint64_t> compares
// lexicographically as a bit string.
std::vector<std::uint64_t> code_for(const Graph& g, const std::vector<int>& label) {
    const int n = g.order();
    std::vector<int> vert_at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vert_at[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
    std::vector<std::uint64_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(vert_at[static_cast<std::size_t>(u)], vert_at[static_cast<std::size_t>(v)]))
                code[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
        }
    }
    return code;
}

// Individualization-refinement canonical labelling in the nauty mould: refine
// to an equitable ordered partition, branch on the first smallest non-singleton
// cell, and keep the lexicographically least leaf code. Automorphisms found at
// equal-code leaves prune sibling branches that only permute an orbit.
class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

    std::string run() {
        Partition root{std::vector<int>(static_cast<std::size_t>(n_))};
        std::iota(root[0].begin(), root[0].end(), 0);
        std::vector<int> prefix;
        descend(std::move(root), prefix);
        std::vector<int> perm = best_label_;
        return to_graph6(relabel(g_, perm));
    }

private:
    using Partition = std::vector<std::vector<int>>;

    static constexpr std::uint64_t node_limit = 5'000'000;
    static constexpr std::size_t max_recorded_autos = 4096;

    const Graph& g_;
    int n_;
    std::vector<std::uint64_t> best_code_;
    std::vector<int> best_label_;  // vertex -> position
    bool have_best_ = false;
    std::vector<std::vector<int>> autos_;
    std::uint64_t nodes_ = 0;

    static std::uint64_t cell_mask(const std::vector<int>& cell) {
        std::uint64_t m = 0;
        for (int v : cell) m |= std::uint64_t{1} << v;
        return m;
    }

    // Split cells by neighbour counts into shattering cells until equitable.
    // Control flow depends only on cell sizes and count multisets, so the
    // refinement commutes with relabelling.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t wi = 0; wi < p.size() && !changed; ++wi) {
                const std::uint64_t wmask = cell_mask(p[wi]);
                for (std::size_t ci = 0; ci < p.size(); ++ci) {
                    if (p[ci].size() <= 1) continue;
                    auto count = [&](int v) {
                        return std::popcount(g_.adjacency_row(v) & wmask);
                    };
                    const int first = count(p[ci][0]);
                    if (std::all_of(p[ci].begin(), p[ci].end(),
                                    [&](int v) { return count(v) == first; }))
                        continue;
                    std::vector<int> cell = std::move(p[ci]);
                    std::stable_sort(cell.begin(), cell.end(),
                                     [&](int a, int b) { return count(a) < count(b); });
                    Partition pieces;
                    for (int v : cell) {
                        if (pieces.empty() || count(pieces.back().front()) != count(v))
                            pieces.emplace_back();
                        pieces.back().push_back(v);
                    }
                    p.erase(p.begin() + static_cast<std::ptrdiff_t>(ci));
                    p.insert(p.begin() + static_cast<std::ptrdiff_t>(ci),
                             std::make_move_iterator(pieces.begin()),
                             std::make_move_iterator(pieces.end()));
                    changed = true;
                    break;
                }
            }
        }
    }

    static int target_cell(const Partition& p) {
        int best = -1;
        std::size_t best_size = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].size() > 1 && (best < 0 || p[i].size() < best_size)) {
                best = static_cast<int>(i);
                best_size = p[i].size();
            }
        }
        return best;
    }

    bool is_automorphism(const std::vector<int>& perm) const {
        for (auto [u, v] : g_.edges())
            if (!g_.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                return false;
        return true;
    }

    void process_leaf(const Partition& p) {
        std::vector<int> label(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < p.size(); ++i) label[static_cast<std::size_t>(p[i][0])] = static_cast<int>(i);
        std::vector<std::uint64_t> code = code_for(g_, label);
        if (!have_best_ || code < best_code_) {
            best_code_ = std::move(code);
            best_label_ = std::move(label);
            have_best_ = true;
            return;
        }
        if (code != best_code_ || autos_.size() >= max_recorded_autos) return;
        // Equal leaf codes witness an automorphism: send each vertex to the
        // one occupying the same position under the incumbent labelling.
        std::vector<int> vert_at(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) vert_at[static_cast<std::size_t>(best_label_[static_cast<std::size_t>(v)])] = v;
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        bool trivial = true;
        for (int v = 0; v < n_; ++v) {
            gamma[static_cast<std::size_t>(v)] = vert_at[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
            if (gamma[static_cast<std::size_t>(v)] != v) trivial = false;
        }
        if (trivial) return;
        if (!is_automorphism(gamma))
            throw std::logic_error("canonical_form: equal leaf codes without automorphism");
        autos_.push_back(std::move(gamma));
    }

    bool pruned(int v, const std::vector<int>& prefix, const std::vector<int>& tried) const {
        for (const auto& gamma : autos_) {
            bool fixes_prefix = true;
            for (int p : prefix) {
                if (gamma[static_cast<std::size_t>(p)] != p) {
                    fixes_prefix = false;
                    break;
                }
            }
            if (!fixes_prefix) continue;
            const int image = gamma[static_cast<std::size_t>(v)];
            if (std::find(tried.begin(), tried.end(), image) != tried.end()) return true;
        }
        return false;
    }

    void descend(Partition p, std::vector<int>& prefix) {
        if (++nodes_ > node_limit)
            throw std::logic_error("canonical_form: refinement search exceeded node limit");
        refine(p);
        const int ti = target_cell(p);
        if (ti < 0) {
            process_leaf(p);
            return;
        }
        const std::vector<int> cell = p[static_cast<std::size_t>(ti)];
        std::vector<int> tried;
        for (int v : cell) {
            if (pruned(v, prefix, tried)) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (static_cast<int>(i) != ti) {
                    child.push_back(p[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cell)
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            descend(std::move(child), prefix);
            prefix.pop_back();
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) { return Canonicalizer(g).run(); }

std::string canonical_form_exhaustive(const Graph& g) {
    if (g.order() > 8)
        throw std::invalid_argument("canonical_form_exhaustive: order must be <= 8");
    std::vector<int> label(static_cast<std::size_t>(g.order()));
    std::iota(label.begin(), label.end(), 0);
    std::vector<int> best_label;
    std::vector<std::uint64_t> best_code;
    do {
        std::vector<std::uint64_t> code = code_for(g, label);
        if (best_label.empty() || code < best_code) {
            best_code = std::move(code);
            best_label = label;
        }
    } while (std::next_permutation(label.begin(), label.end()));
    return to_graph6(relabel(g, best_label));
}

}  // namespace starclique
