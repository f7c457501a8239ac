#pragma once

#include <functional>

#include "gtx/dpo.hpp"

namespace gtx {

/// Decision procedure for membership in the subgraph closure of a language.
struct LanguagePredicate {
    std::string name;
    std::function<bool(const Graph&)> membership;
    bool subgraph_closed = false;
    /// Membership in the language itself, when it differs from the closure.
    /// Empty means: same as `membership` if subgraph closed, unknown otherwise.
    std::function<bool(const Graph&)> language_membership;

    bool operator()(const Graph& g) const { return membership(g); }
    /// nullopt when membership in the language itself cannot be decided.
    std::optional<bool> in_language(const Graph& g) const;
};

/// Names: all, discrete, acyclic, forest, two_colourable, efd_t_cycle,
/// linear_forest (disjoint directed paths), loop_forest (a forest plus at
/// most one loop), bounded_degree(k).
LanguagePredicate builtin(const std::string& name);
std::vector<std::string> builtin_names();

bool type_graph_member(const Graph& h, const Graph& type_graph);
LanguagePredicate type_graph_predicate(const std::string& name, const Graph& type_graph);

bool finite_closure_member(const Graph& h, const std::vector<Graph>& members);
LanguagePredicate finite_closure_predicate(const std::string& name, std::vector<Graph> members);

/// The 2-cycle type graph over one node label and one edge label.
Graph two_cycle_type_graph(const std::string& node_label = "dot", const std::string& edge_label = "plain");

bool is_acyclic(const Graph& g);
/// Every directed cycle passes through at least one edge labelled `label`.
bool every_cycle_has_label(const Graph& g, const std::string& label);

struct ClosednessViolation {
    Graph from;
    Graph to;
    std::string rule;
};

/// Searches all graphs with at most `max_nodes` nodes and `max_edges` edges
/// over the system's labels; an empty result is evidence, not proof.
std::vector<ClosednessViolation> closedness_probe(const GtSystem& sys, const LanguagePredicate& pred,
                                                  std::size_t max_nodes, std::size_t max_edges);

/// Sufficient for termination: every rule has fewer items on the right.
bool check_size_reducing(const GtSystem& sys);

}  // namespace gtx
