#include "gtx/enumerate.hpp"

#include <set>
#include <unordered_set>

namespace gtx {

namespace {

// Node-label multisets of size n, as non-decreasing index sequences.
void label_multisets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    std::size_t from = cur.empty() ? 0 : cur.back();
    for (std::size_t i = from; i < k; ++i) {
        cur.push_back(i);
        label_multisets(n, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

void for_each_graph(const std::vector<std::string>& node_labels,
                    const std::vector<std::string>& edge_labels, std::size_t max_nodes,
                    std::size_t max_edges, const std::function<bool(const Graph&)>& visit) {
    std::vector<Label> vl, el;
    for (const auto& s : node_labels) vl.push_back(intern(s));
    for (const auto& s : edge_labels) el.push_back(intern(s));
    for (std::size_t n = 0; n <= max_nodes; ++n) {
        if (n > 0 && vl.empty()) break;
        std::vector<std::vector<std::size_t>> ms;
        std::vector<std::size_t> cur;
        label_multisets(n, vl.size(), cur, ms);
        std::vector<Graph> level;
        for (const auto& m : ms) {
            Graph g;
            for (std::size_t i = 0; i < n; ++i) g.add_node(static_cast<Id>(i), vl[m[i]]);
            level.push_back(std::move(g));
        }
        for (std::size_t e = 0;; ++e) {
            for (const auto& g : level)
                if (!visit(g)) return;
            if (e == max_edges || n == 0 || el.empty()) break;
            std::vector<Graph> next;
            std::unordered_set<CanonicalKey> seen;
            for (const auto& g : level) {
                Id id = static_cast<Id>(n + e);
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t)
                        for (Label l : el) {
                            Graph h = g;
                            h.add_edge(id, static_cast<Id>(s), static_cast<Id>(t), l);
                            if (seen.insert(canonical_key(h)).second) next.push_back(std::move(h));
                        }
            }
            level = std::move(next);
        }
    }
}

std::vector<Graph> enumerate_graphs(const std::vector<std::string>& node_labels,
                                    const std::vector<std::string>& edge_labels,
                                    std::size_t max_nodes, std::size_t max_edges) {
    std::vector<Graph> out;
    for_each_graph(node_labels, edge_labels, max_nodes, max_edges, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> labels_of(
    const Signature& sig, const std::vector<const Graph*>& graphs) {
    std::set<std::string> v(sig.node_labels.begin(), sig.node_labels.end());
    std::set<std::string> e(sig.edge_labels.begin(), sig.edge_labels.end());
    for (const Graph* g : graphs) {
        for (const auto& n : g->nodes()) v.insert(label_name(n.label));
        for (const auto& x : g->edges()) e.insert(label_name(x.label));
    }
    return {{v.begin(), v.end()}, {e.begin(), e.end()}};
}

}  // namespace gtx
