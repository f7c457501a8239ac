#pragma once

#include "gtx/critical_pairs.hpp"
#include "gtx/recognizer.hpp"

namespace gtx {

struct CaseStudy {
    std::string name;
    std::string description;
    GtSystem system;  // the reduction system that gets analysed
    LanguagePredicate predicate;
    Mode mode = Mode::Confluence;
    Assumptions assumptions;
    std::optional<Grammar> grammar;
    std::optional<RecognizerSpec> recognizer;
    std::vector<std::string> notes;  // carried into reports

    struct Expected {
        std::size_t pairs = 0;
        std::size_t non_garbage = 0;
        Conclusion conclusion = Conclusion::Inconclusive;
    } expected;
};

/// sp, lsp, efd, eg_a, eg_b, eg_0, eg_1, eg_2, eg_3, eg_4, eg_6, eg_sub.
CaseStudy build(const std::string& name);
std::vector<std::string> case_study_names();

/// sp_example, eg1_counterexample, egb_cycle, triangle, two_cycle, path(n),
/// efd_example.
Graph sample_graph(const std::string& name);

/// Compact construction helpers shared with the tests.
struct NodeSpec {
    Id id;
    std::string label;
};
struct EdgeSpec {
    Id id;
    Id src;
    Id tgt;
    std::string label;
};
Graph make_graph(const std::vector<NodeSpec>& nodes, const std::vector<EdgeSpec>& edges = {});
Graph directed_path(std::size_t n, const std::string& node_label = "dot", const std::string& edge_label = "plain");
Graph directed_cycle(std::size_t n, const std::string& node_label = "dot", const std::string& edge_label = "plain");

}  // namespace gtx
