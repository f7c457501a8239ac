#include "gtx/predicates.hpp"

#include <numeric>

#include "gtx/enumerate.hpp"

namespace gtx {

std::optional<bool> LanguagePredicate::in_language(const Graph& g) const {
    if (language_membership) return language_membership(g);
    if (subgraph_closed) return membership(g);
    return std::nullopt;
}

namespace {

struct Dsu {
    std::vector<std::size_t> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

bool acyclic_without(const Graph& g, const std::optional<Label>& skip) {
    std::size_t n = g.node_count();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<int> indeg(n, 0);
    for (const auto& e : g.edges()) {
        if (skip && e.label == *skip) continue;
        std::size_t s = *g.node_index(e.src), t = *g.node_index(e.tgt);
        out[s].push_back(t);
        indeg[t]++;
    }
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) stack.push_back(i);
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (std::size_t w : out[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n;
}

bool is_forest(const Graph& g) {
    Dsu d(g.node_count());
    for (const auto& e : g.edges())
        if (!d.unite(*g.node_index(e.src), *g.node_index(e.tgt))) return false;
    return true;
}

// Disjoint unions of simple directed paths.
bool is_linear_forest(const Graph& g) {
    std::vector<int> in(g.node_count(), 0), out(g.node_count(), 0);
    for (const auto& e : g.edges()) {
        if (e.src == e.tgt) return false;
        if (++out[*g.node_index(e.src)] > 1) return false;
        if (++in[*g.node_index(e.tgt)] > 1) return false;
    }
    return acyclic_without(g, std::nullopt);
}

// Forests, ignoring loops, carrying at most one loop.
bool is_loop_forest(const Graph& g) {
    std::size_t loops = 0;
    Dsu d(g.node_count());
    for (const auto& e : g.edges()) {
        if (e.src == e.tgt) {
            if (++loops > 1) return false;
        } else if (!d.unite(*g.node_index(e.src), *g.node_index(e.tgt))) {
            return false;
        }
    }
    return true;
}

bool bipartite_underlying(const Graph& g) {
    std::size_t n = g.node_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges()) {
        std::size_t s = *g.node_index(e.src), t = *g.node_index(e.tgt);
        if (s == t) return false;
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    std::vector<int> side(n, -1);
    for (std::size_t r = 0; r < n; ++r) {
        if (side[r] >= 0) continue;
        side[r] = 0;
        std::vector<std::size_t> q{r};
        while (!q.empty()) {
            std::size_t v = q.back();
            q.pop_back();
            for (std::size_t w : adj[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

LanguagePredicate closed(std::string name, std::function<bool(const Graph&)> f) {
    LanguagePredicate p;
    p.name = std::move(name);
    p.membership = std::move(f);
    p.subgraph_closed = true;
    return p;
}

}  // namespace

bool is_acyclic(const Graph& g) { return acyclic_without(g, std::nullopt); }

bool every_cycle_has_label(const Graph& g, const std::string& label) {
    return acyclic_without(g, intern(label));
}

std::vector<std::string> builtin_names() {
    return {"all", "discrete", "acyclic", "forest", "two_colourable", "efd_t_cycle", "linear_forest", "loop_forest", "bounded_degree(k)"};
}

LanguagePredicate builtin(const std::string& name) {
    if (name == "all") return closed(name, [](const Graph&) { return true; });
    if (name == "discrete") return closed(name, [](const Graph& g) { return g.edge_count() == 0; });
    if (name == "acyclic") return closed(name, is_acyclic);
    if (name == "forest") return closed(name, is_forest);
    if (name == "two_colourable") return closed(name, bipartite_underlying);
    if (name == "linear_forest") return closed(name, is_linear_forest);
    if (name == "loop_forest") return closed(name, is_loop_forest);
    if (name == "efd_t_cycle")
        return closed(name, [](const Graph& g) { return every_cycle_has_label(g, "t"); });
    const std::string prefix = "bounded_degree(";
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
        std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            std::size_t k = std::stoul(digits);
            return closed(name, [k](const Graph& g) {
                std::vector<std::size_t> deg(g.node_count(), 0);
                for (const auto& e : g.edges()) {
                    deg[*g.node_index(e.src)]++;
                    deg[*g.node_index(e.tgt)]++;
                }
                for (auto d : deg)
                    if (d > k) return false;
                return true;
            });
        }
    }
    throw Error("unknown predicate '" + name + "'");
}

bool type_graph_member(const Graph& h, const Graph& type_graph) {
    return find_homomorphism(h, type_graph).has_value();
}

LanguagePredicate type_graph_predicate(const std::string& name, const Graph& type_graph) {
    return closed(name, [type_graph](const Graph& g) { return type_graph_member(g, type_graph); });
}

bool finite_closure_member(const Graph& h, const std::vector<Graph>& members) {
    for (const auto& m : members)
        if (first_monomorphism(h, m)) return true;
    return false;
}

LanguagePredicate finite_closure_predicate(const std::string& name, std::vector<Graph> members) {
    LanguagePredicate p;
    p.name = name;
    p.subgraph_closed = true;
    p.membership = [members](const Graph& g) { return finite_closure_member(g, members); };
    p.language_membership = [members](const Graph& g) {
        for (const auto& m : members)
            if (isomorphic(g, m)) return true;
        return false;
    };
    return p;
}

Graph two_cycle_type_graph(const std::string& node_label, const std::string& edge_label) {
    Graph t;
    t.add_node(1, node_label).add_node(2, node_label);
    t.add_edge(3, 1, 2, edge_label).add_edge(4, 2, 1, edge_label);
    return t;
}

std::vector<ClosednessViolation> closedness_probe(const GtSystem& sys, const LanguagePredicate& pred,
                                                  std::size_t max_nodes, std::size_t max_edges) {
    std::vector<const Graph*> gs;
    for (const auto& r : sys.rules) gs.insert(gs.end(), {&r.lhs, &r.rhs});
    auto [vl, el] = labels_of(sys.signature, gs);
    std::vector<ClosednessViolation> out;
    if (sys.rules.empty()) return out;
    for_each_graph(vl, el, max_nodes, max_edges, [&](const Graph& g) {
        if (!pred(g)) return true;
        for (auto& d : all_derivations(g, sys))
            if (!pred(d.result)) out.push_back({g, d.result, d.rule().name});
        return true;
    });
    return out;
}

bool check_size_reducing(const GtSystem& sys) {
    for (const auto& r : sys.rules)
        if (r.lhs.node_count() + r.lhs.edge_count() <= r.rhs.node_count() + r.rhs.edge_count())
            return false;
    return true;
}

}  // namespace gtx
