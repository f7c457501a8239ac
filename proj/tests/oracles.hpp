#pragma once

// Brute-force reference implementations used to check the optimised ones.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "gtx/graph.hpp"

namespace oracle {

using gtx::Graph;
using gtx::Id;

/// Smallest encoding over all node orderings; equal iff isomorphic. Label
/// handles stand in for names, so encodings compare within one process only.
inline std::string brute_canonical(const Graph& g) {
    const auto& nodes = g.nodes();
    const std::size_t n = nodes.size();
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& e : g.edges()) ends.emplace_back(*g.node_index(e.src), *g.node_index(e.tgt));
    std::vector<std::size_t> perm(n);  // perm[i] = position of node i
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> enc, best;
    do {
        enc.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) enc[perm[i]] = nodes[i].label;
        const std::size_t mid = enc.size();
        for (std::size_t k = 0; k < ends.size(); ++k)
            enc.push_back((std::uint64_t(perm[ends[k].first]) << 40) | (std::uint64_t(perm[ends[k].second]) << 32) |
                          g.edges()[k].label);
        std::sort(enc.begin() + static_cast<std::ptrdiff_t>(mid), enc.end());
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string out = std::to_string(n) + "/" + std::to_string(ends.size()) + ":";
    for (auto v : best) out += std::to_string(v) + ",";
    return out;
}

/// Injective morphisms pattern -> host, counted by trying every injective
/// assignment of nodes and then of edges.
inline std::size_t brute_mono_count(const Graph& p, const Graph& h) {
    const auto& pn = p.nodes();
    const auto& pe = p.edges();
    std::size_t count = 0;
    std::vector<std::size_t> node_img(pn.size());
    std::vector<bool> node_used(h.node_count(), false);
    std::vector<std::size_t> edge_img(pe.size());
    std::vector<bool> edge_used(h.edge_count(), false);

    std::function<void(std::size_t)> edges = [&](std::size_t i) {
        if (i == pe.size()) {
            ++count;
            return;
        }
        for (std::size_t j = 0; j < h.edge_count(); ++j) {
            if (edge_used[j]) continue;
            const auto& a = pe[i];
            const auto& b = h.edges()[j];
            if (a.label != b.label) continue;
            if (h.nodes()[node_img[*p.node_index(a.src)]].id != b.src) continue;
            if (h.nodes()[node_img[*p.node_index(a.tgt)]].id != b.tgt) continue;
            edge_used[j] = true;
            edges(i + 1);
            edge_used[j] = false;
        }
    };
    std::function<void(std::size_t)> nodes = [&](std::size_t i) {
        if (i == pn.size()) {
            edges(0);
            return;
        }
        for (std::size_t j = 0; j < h.node_count(); ++j) {
            if (node_used[j] || h.nodes()[j].label != pn[i].label) continue;
            node_used[j] = true;
            node_img[i] = j;
            nodes(i + 1);
            node_used[j] = false;
        }
    };
    nodes(0);
    return count;
}

/// Random graph with node ids 1..n and edge ids from n+1.
inline Graph random_graph(std::mt19937& rng, std::size_t max_nodes, std::size_t max_edges,
                          const std::vector<std::string>& node_labels, const std::vector<std::string>& edge_labels,
                          std::size_t min_nodes = 0) {
    std::uniform_int_distribution<std::size_t> nn(min_nodes, max_nodes);
    Graph g;
    const std::size_t n = nn(rng);
    for (std::size_t i = 1; i <= n; ++i)
        g.add_node(static_cast<Id>(i), node_labels[std::uniform_int_distribution<std::size_t>(0, node_labels.size() - 1)(rng)]);
    if (n == 0) return g;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
    std::uniform_int_distribution<Id> pick(1, static_cast<Id>(n));
    for (std::size_t i = 0; i < m; ++i)
        g.add_edge(static_cast<Id>(n + 1 + i), pick(rng), pick(rng),
                   edge_labels[std::uniform_int_distribution<std::size_t>(0, edge_labels.size() - 1)(rng)]);
    return g;
}

/// Simple directed cycles, as edge id lists; loops included.
inline std::vector<std::vector<Id>> all_cycles(const Graph& g) {
    std::vector<std::vector<Id>> out;
    // Cycles are reported from their smallest node; paths only visit
    // larger nodes.
    for (const auto& start : g.nodes()) {
        std::vector<Id> path;
        std::vector<Id> visited{start.id};
        std::function<void(Id)> dfs = [&](Id at) {
            for (const auto& e : g.edges()) {
                if (e.src != at) continue;
                if (e.tgt == start.id) {
                    path.push_back(e.id);
                    out.push_back(path);
                    path.pop_back();
                } else if (e.tgt > start.id && std::find(visited.begin(), visited.end(), e.tgt) == visited.end()) {
                    visited.push_back(e.tgt);
                    path.push_back(e.id);
                    dfs(e.tgt);
                    path.pop_back();
                    visited.pop_back();
                }
            }
        };
        dfs(start.id);
    }
    return out;
}

}  // namespace oracle
