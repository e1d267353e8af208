#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "starclique/arrowing.hpp"
#include "starclique/audit.hpp"
#include "starclique/formulas.hpp"
#include "starclique/graph.hpp"
#include "starclique/lemmas.hpp"
#include "starclique/search.hpp"

using namespace starclique;

namespace {

// Exit codes: 0 success, 1 negative check verdict, 2 usage / module error,
// 3 budget exceeded.
constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct Flags {
    long long k = 0;
    long long n = 0;
    int t = -1;
    long long ell = -1;
    std::string graph_path;
    std::string format = "auto";
    bool json = false;
    int threads = 1;
    int budget_edges = 32;
    int max_edges = 12;
    double eps = 0.5;
    long long k_min = 2;
    long long k_max = 5;
    long long window = 50;
};

[[noreturn]] void usage_error(const std::string& msg) { throw std::invalid_argument(msg); }

Graph load_graph(const Flags& f) {
    if (f.graph_path.empty()) usage_error("a graph is required: --graph FILE (or - for stdin)");
    std::string text;
    if (f.graph_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(f.graph_path);
        if (!in) usage_error("cannot open " + f.graph_path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    GraphFormat fmt = GraphFormat::autodetect;
    if (f.format == "graph6") fmt = GraphFormat::graph6;
    if (f.format == "edges") fmt = GraphFormat::edge_list;
    return read_graph(text, fmt);
}

void require_k(const Flags& f) {
    if (f.k == 0) usage_error("--k is required");
}

void require_kn(const Flags& f) {
    require_k(f);
    if (f.n == 0) usage_error("--n is required");
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::string vertex_list(VertexSet s) {
    std::string out;
    for (int v : s.to_vector()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out.empty() ? "(none)" : out;
}

void print_colouring(const TwoColouring& c) {
    auto edges = c.host.edges();
    std::string red, blue;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string e = std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
        auto& side = c.colour[i] == EdgeColour::red ? red : blue;
        if (!side.empty()) side += ' ';
        side += e;
    }
    std::cout << "red:  " << (red.empty() ? "(none)" : red) << '\n';
    std::cout << "blue: " << (blue.empty() ? "(none)" : blue) << '\n';
}

nlohmann::json stats_json(const SearchStats& s) {
    return {{"nodes_expanded", s.nodes_expanded},
            {"conflicts", s.conflicts},
            {"colourings_ruled_out", s.colourings_ruled_out},
            {"components_searched", s.components_searched}};
}

void print_stats(const SearchStats& s) {
    std::cout << "components=" << s.components_searched << " nodes=" << s.nodes_expanded
              << " conflicts=" << s.conflicts << " colourings_ruled_out=" << s.colourings_ruled_out
              << '\n';
}

// arrows / witness: decide the arrowing relation; witness also prints the
// good colouring that certifies a negative verdict.
int run_arrows(const Flags& f, bool want_witness) {
    require_kn(f);
    Graph g = load_graph(f);
    ArrowDecision d =
        arrows(g, static_cast<int>(f.k), static_cast<int>(f.n), ArrowOptions{f.budget_edges});

    if (f.json) {
        nlohmann::json j{{"k", f.k}, {"n", f.n}, {"stats", stats_json(d.stats)}};
        switch (d.status) {
            case ArrowDecision::Status::arrows: j["verdict"] = "arrows"; break;
            case ArrowDecision::Status::does_not_arrow: j["verdict"] = "does_not_arrow"; break;
            case ArrowDecision::Status::budget_exceeded: j["verdict"] = "budget_exceeded"; break;
        }
        j["certificate"] =
            d.certificate ? colouring_to_json(*d.certificate) : nlohmann::json(nullptr);
        emit(j);
    } else if (d.status == ArrowDecision::Status::arrows) {
        std::cout << "ARROWS\n";
        print_stats(d.stats);
    } else if (d.status == ArrowDecision::Status::does_not_arrow) {
        std::cout << "DOES NOT ARROW\n";
        if (want_witness && d.certificate) print_colouring(*d.certificate);
        print_stats(d.stats);
    } else {
        std::cout << "BUDGET EXCEEDED (per-component edge budget " << f.budget_edges << ")\n";
    }

    if (d.status == ArrowDecision::Status::budget_exceeded) return exit_budget;
    return d.status == ArrowDecision::Status::arrows ? exit_ok : exit_negative;
}

int print_graph(const Graph& g, bool json) {
    if (json) {
        emit({{"graph6", to_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}});
    } else {
        std::cout << to_graph6(g) << '\n';
    }
    return exit_ok;
}

int run_construct(const Flags& f, const std::string& kind) {
    if (kind == "erdos") {
        require_k(f);
        return print_graph(erdos_graph(static_cast<int>(f.k)), f.json);
    }
    if (kind == "extremal") {
        require_kn(f);
        return print_graph(extremal_candidate({f.k, f.n}), f.json);
    }
    // colouring: run the constructive lemma on the supplied host.
    require_kn(f);
    Graph g = load_graph(f);
    if (f.ell >= 0 && g.order() - ramsey_star_clique(f.k, f.n) != f.ell)
        usage_error("--ell disagrees with the graph order (expected order k(n-1)+1+ell)");
    auto col = good_colouring(g, static_cast<int>(f.k), static_cast<int>(f.n));
    if (!col) {
        if (f.json)
            emit({{"colouring", nullptr}, {"reason", "complement below the packing edge threshold"}});
        else
            std::cout << "NO COLOURING (complement below the packing edge threshold)\n";
        return exit_negative;
    }
    if (f.json)
        emit(colouring_to_json(*col));
    else
        print_colouring(*col);
    return exit_ok;
}

int run_formulas(const Flags& f) {
    require_kn(f);
    long long r = ramsey_star_clique(f.k, f.n);
    long long rs = rhat_star(f.k, f.n);
    long long plb = pikhurko_lower_bound(f.k, f.n);
    long long rp = r_prime(f.k, f.n);
    long long ft = f_threshold(f.k, f.n);
    bool t3_domain = f.n >= theorem3_threshold(f.k);
    double erdos_floor = f.n >= 3 ? erdos_etal_lower_bound(f.k, f.n, f.eps) : 0.0;

    if (f.json) {
        nlohmann::json j{{"k", f.k},           {"n", f.n},          {"r", r},
                         {"rhat_star", rs},    {"pikhurko_lb", plb}, {"r_prime", rp},
                         {"f_threshold", ft}};
        j["theorem3"] = t3_domain ? nlohmann::json(rhat_theorem3(f.k, f.n)) : nlohmann::json(nullptr);
        if (f.n >= 3) j["erdos_floor"] = {{"eps", f.eps}, {"value", erdos_floor}};
        if (f.n == 3) {
            BoundComparison bc = compare_counterexample_bound(f.k);
            j["counterexample"] = {{"bound", bc.counterexample_bound},
                                   {"construction_edges", bc.construction_edges},
                                   {"bound_below_construction", bc.bound_below_construction}};
        }
        emit(j);
        return exit_ok;
    }

    std::cout << "k=" << f.k << " n=" << f.n << '\n';
    std::cout << "r            " << r << '\n';
    std::cout << "rhat_star    " << rs << '\n';
    std::cout << "pikhurko_lb  " << plb << '\n';
    std::cout << "r_prime      " << rp << '\n';
    std::cout << "f_threshold  " << ft << '\n';
    if (t3_domain)
        std::cout << "theorem3     " << rhat_theorem3(f.k, f.n) << '\n';
    else
        std::cout << "theorem3     out of domain (needs n >= " << theorem3_threshold(f.k) << ")\n";
    if (f.n >= 3)
        std::cout << "erdos_floor  " << erdos_floor << "  (eps=" << f.eps << ")\n";
    if (f.n == 3) {
        BoundComparison bc = compare_counterexample_bound(f.k);
        std::cout << "counterexample_bound      " << bc.counterexample_bound << '\n';
        std::cout << "construction_edges        " << bc.construction_edges << '\n';
        std::cout << "bound_below_construction  " << (bc.bound_below_construction ? "yes" : "no")
                  << '\n';
    }
    return exit_ok;
}

int run_audit(const Flags& f) {
    std::vector<AuditReport> reports = audit_inequalities({f.k_min, f.k_max, f.window});
    if (f.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(audit_report_to_json(r));
        emit(arr);
    } else {
        for (const auto& r : reports) {
            if (r.violations.empty()) {
                std::cout << r.inequality << ": OK (0 violations over " << r.points_checked
                          << " points)\n";
            } else {
                std::cout << r.inequality << ": FAIL (" << r.violations.size()
                          << " violations over " << r.points_checked << " points)\n";
                for (const auto& v : r.violations) {
                    std::cout << "  at";
                    for (const auto& [name, value] : v.point)
                        std::cout << ' ' << name << '=' << value;
                    std::cout << ": lhs=" << v.lhs << " < rhs=" << v.rhs << '\n';
                }
            }
            std::cout << "  grid: " << r.grid << '\n';
        }
    }
    for (const auto& r : reports)
        if (!r.violations.empty()) return exit_negative;
    return exit_ok;
}

int print_exact_result(const ExactResult& r, const char* label, bool json) {
    if (json) {
        emit(exact_result_to_json(r));
    } else {
        std::cout << "k=" << r.params.k << " n=" << r.params.n << ' ' << label << '=' << r.value
                  << " exact=" << (r.exact ? "true" : "false") << '\n';
        std::cout << "lower_bound=" << r.lower_bound;
        if (r.witness) std::cout << " witness=" << to_graph6(*r.witness);
        std::cout << '\n';
        std::cout << "exhausted: " << r.exhausted << '\n';
    }
    return r.exact ? exit_ok : exit_budget;
}

int run_lemma(const Flags& f, const std::string& which) {
    Graph g = load_graph(f);
    if (which == "dichotomy") {
        require_k(f);
        DichotomyResult r = mindeg_or_matching(g, static_cast<int>(f.k));
        if (f.json) {
            emit(dichotomy_to_json(r));
        } else if (r.kind == DichotomyResult::Kind::mindeg_subset) {
            std::cout << "subset: " << vertex_list(r.subset) << '\n';
        } else {
            std::cout << "matching: " << r.matching_size << " edges\n";
        }
        return exit_ok;
    }
    if (which == "packing") {
        require_kn(f);
        if (f.t < 0) usage_error("--t is required");
        Packing p = disjoint_packing(g, static_cast<int>(f.k), static_cast<int>(f.n), f.t);
        if (f.json) {
            emit(packing_to_json(p));
        } else {
            for (std::size_t i = 0; i < p.parts.size(); ++i)
                std::cout << "part " << i + 1 << ": " << vertex_list(p.parts[i]) << '\n';
        }
        return exit_ok;
    }
    // redundant: vertices in no K_n.
    if (f.n == 0) usage_error("--n is required");
    VertexSet out = redundant_vertices(g, static_cast<int>(f.n));
    if (f.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (int v : out.to_vector()) arr.push_back(v);
        emit({{"redundant", arr}});
    } else {
        std::cout << "redundant: " << vertex_list(out) << '\n';
    }
    return exit_ok;
}

int run_peel(const Flags& f) {
    require_k(f);
    Graph g = load_graph(f);
    if (f.n == 0) {
        auto layer = peel_T(g, static_cast<int>(f.k));
        if (!layer) {
            if (f.json)
                emit(nlohmann::json(nullptr));
            else
                std::cout << "NO LAYER\n";
            return exit_negative;
        }
        if (f.json) {
            emit(peel_layer_to_json(*layer));
        } else {
            std::cout << "T: " << vertex_list(layer->t_side) << '\n';
            std::cout << "B: " << vertex_list(layer->b_side) << '\n';
            std::cout << "minimal: " << (layer->minimal ? "yes" : "no") << '\n';
        }
        return exit_ok;
    }
    auto layers = peel_cascade(g, static_cast<int>(f.k), static_cast<int>(f.n));
    if (f.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& layer : layers) arr.push_back(peel_layer_to_json(layer));
        emit(arr);
    } else if (layers.empty()) {
        std::cout << "NO LAYERS\n";
    } else {
        for (std::size_t i = 0; i < layers.size(); ++i)
            std::cout << "layer " << i + 1 << ": T = " << vertex_list(layers[i].t_side)
                      << " | B = " << vertex_list(layers[i].b_side) << " | surplus "
                      << layers[i].surplus << " | minimal " << (layers[i].minimal ? "yes" : "no")
                      << '\n';
    }
    return layers.empty() ? exit_negative : exit_ok;
}

int run_report(const Flags& f) {
    long long k_max = f.k == 0 ? 3 : f.k;
    long long n_max = f.n == 0 ? 3 : f.n;
    GapReport rep =
        conjecture_gap_report(k_max, n_max, SearchOptions{f.budget_edges, f.max_edges, f.threads});
    if (f.json) {
        emit(gap_report_to_json(rep));
        return exit_ok;
    }
    std::cout << std::left << std::setw(4) << "k" << std::setw(4) << "n" << std::setw(6) << "rhat"
              << std::setw(11) << "rhat_star" << std::setw(13) << "closed_form" << std::setw(7)
              << "exact" << std::setw(7) << "agree" << "witness\n";
    for (const auto& row : rep.rows) {
        auto opt = [](const std::optional<long long>& v) {
            return v ? std::to_string(*v) : std::string("-");
        };
        std::cout << std::left << std::setw(4) << row.k << std::setw(4) << row.n << std::setw(6)
                  << opt(row.rhat) << std::setw(11) << opt(row.rhat_star) << std::setw(13)
                  << row.closed_form << std::setw(7) << (row.exact ? "yes" : "no") << std::setw(7)
                  << (row.agree ? (*row.agree ? "yes" : "no") : "-")
                  << (row.witness_graph6.empty() ? "-" : row.witness_graph6) << '\n';
    }
    std::cout << "note: " << rep.limitation_note << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    Flags f;
    CLI::App app{"Exact workbench for star-versus-clique size Ramsey numbers: arrowing decisions "
                 "with certificates, constructive lemmas, extremal candidates, closed-form values, "
                 "and exact-arithmetic inequality audits."};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--k", f.k, "star size k (k >= 2)");
    app.add_option("--n", f.n, "clique size n (n >= 2); for peel, enables the cascade");
    app.add_option("--graph", f.graph_path, "graph file (graph6 or edge list), - for stdin");
    app.add_option("--format", f.format, "graph input format (default: auto)")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}));
    app.add_flag("--json", f.json, "emit JSON instead of text");
    app.add_option("--threads", f.threads, "worker threads for the searches (default 1)");
    app.add_option("--budget-edges", f.budget_edges,
                   "per-component edge budget for the engine (default 32)");
    app.add_option("--max-edges", f.max_edges,
                   "enumeration ceiling for the unrestricted search (default 12)");
    app.add_option("--t", f.t, "number of extra packed parts (lemma packing)");
    app.add_option("--ell", f.ell, "expected vertex surplus cross-check (construct colouring)");
    app.add_option("--eps", f.eps, "epsilon for the probabilistic floor (formulas, default 0.5)");
    app.add_option("--k-min", f.k_min, "audit: smallest k (default 2)");
    app.add_option("--k-max", f.k_max, "audit: largest k (default 5)");
    app.add_option("--window", f.window, "audit: values of n per k (default 50)");

    auto* cmd_arrows = app.add_subcommand("arrows", "decide F -> (K_{1,k}, K_n)");
    auto* cmd_witness =
        app.add_subcommand("witness", "like arrows, printing the good-colouring certificate");
    auto* cmd_construct =
        app.add_subcommand("construct", "build a named graph or colouring (erdos|extremal|colouring)");
    std::string construct_kind;
    cmd_construct->add_option("kind", construct_kind, "erdos | extremal | colouring")
        ->required()
        ->check(CLI::IsMember({"erdos", "extremal", "colouring"}));
    auto* cmd_formulas = app.add_subcommand("formulas", "closed-form values at (k, n)");
    auto* cmd_audit =
        app.add_subcommand("audit", "check the proof inequalities in exact rational arithmetic");
    auto* cmd_rhat = app.add_subcommand("rhat", "minimum edges over all graphs");
    auto* cmd_rhat_star =
        app.add_subcommand("rhat-star", "minimum edges over subgraphs of K_{k(n-1)+1}");
    auto* cmd_lemma =
        app.add_subcommand("lemma", "run a constructive lemma (dichotomy|packing|redundant)");
    std::string lemma_which;
    cmd_lemma->add_option("which", lemma_which, "dichotomy | packing | redundant")
        ->required()
        ->check(CLI::IsMember({"dichotomy", "packing", "redundant"}));
    auto* cmd_peel = app.add_subcommand("peel", "peel a layer (add --n for the full cascade)");
    auto* cmd_report = app.add_subcommand("report", "sweep both minima against the closed form");

    app.footer(R"(Examples:
  starclique arrows --k 2 --n 3 --graph K5.g6
  starclique witness --k 2 --n 3 --graph K4.g6
  starclique formulas --k 2 --n 3
  starclique construct erdos --k 3
  starclique construct extremal --k 2 --n 3
  starclique construct colouring --k 2 --n 3 --graph host.g6
  starclique rhat --k 2 --n 3
  starclique rhat-star --k 3 --n 3 --threads 4
  starclique lemma dichotomy --k 2 --graph g.g6
  starclique lemma packing --k 2 --n 11 --t 1 --graph h.g6
  starclique lemma redundant --n 3 --graph g.g6
  starclique peel --k 2 --graph K7.g6
  starclique peel --k 2 --n 4 --graph K7.g6
  starclique audit
  starclique report --k 3 --n 3 --json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cmd_arrows->parsed()) return run_arrows(f, false);
        if (cmd_witness->parsed()) return run_arrows(f, true);
        if (cmd_construct->parsed()) return run_construct(f, construct_kind);
        if (cmd_formulas->parsed()) return run_formulas(f);
        if (cmd_audit->parsed()) return run_audit(f);
        if (cmd_rhat->parsed()) {
            require_kn(f);
            return print_exact_result(
                compute_rhat({f.k, f.n}, SearchOptions{f.budget_edges, f.max_edges, f.threads}),
                "rhat", f.json);
        }
        if (cmd_rhat_star->parsed()) {
            require_kn(f);
            return print_exact_result(
                compute_rhat_star({f.k, f.n}, SearchOptions{f.budget_edges, f.max_edges, f.threads}),
                "rhat_star", f.json);
        }
        if (cmd_lemma->parsed()) return run_lemma(f, lemma_which);
        if (cmd_peel->parsed()) return run_peel(f);
        if (cmd_report->parsed()) return run_report(f);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
