#pragma once

#include <functional>

#include "gtx/graph.hpp"

namespace gtx {

/// Every graph with at most `max_nodes` nodes and `max_edges` edges over the
/// given labels, one per isomorphism class. Loops and parallel edges included.
/// Visits classes in order of node count, then edge count; stops early when
/// the visitor returns false.
void for_each_graph(const std::vector<std::string>& node_labels,
                    const std::vector<std::string>& edge_labels, std::size_t max_nodes,
                    std::size_t max_edges, const std::function<bool(const Graph&)>& visit);

std::vector<Graph> enumerate_graphs(const std::vector<std::string>& node_labels,
                                    const std::vector<std::string>& edge_labels,
                                    std::size_t max_nodes, std::size_t max_edges);

/// Labels occurring in the signature and in the given graphs, sorted.
std::pair<std::vector<std::string>, std::vector<std::string>> labels_of(
    const Signature& sig, const std::vector<const Graph*>& graphs);

}  // namespace gtx
