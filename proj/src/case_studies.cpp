#include "gtx/case_studies.hpp"

#include "gtx/enumerate.hpp"

namespace gtx {

Graph make_graph(const std::vector<NodeSpec>& nodes, const std::vector<EdgeSpec>& edges) {
    Graph g;
    for (const auto& n : nodes) g.add_node(n.id, n.label);
    for (const auto& e : edges) g.add_edge(e.id, e.src, e.tgt, e.label);
    return g;
}

Graph directed_path(std::size_t n, const std::string& node_label, const std::string& edge_label) {
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.add_node(static_cast<Id>(i), node_label);
    for (std::size_t i = 1; i < n; ++i)
        g.add_edge(static_cast<Id>(n + i), static_cast<Id>(i), static_cast<Id>(i + 1), edge_label);
    return g;
}

Graph directed_cycle(std::size_t n, const std::string& node_label, const std::string& edge_label) {
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.add_node(static_cast<Id>(i), node_label);
    for (std::size_t i = 1; i <= n; ++i)
        g.add_edge(static_cast<Id>(n + i), static_cast<Id>(i), static_cast<Id>(i % n + 1), edge_label);
    return g;
}

namespace {

const std::string D = "dot";
const std::string U = "plain";

Rule rule(std::string name, Graph l, Graph k, Graph r) {
    Rule out{std::move(name), std::move(l), std::move(k), std::move(r)};
    auto defects = validate_rule(out);
    if (!defects.empty()) throw Error("malformed built-in rule: " + defects.front());
    return out;
}

Graph dots(std::initializer_list<Id> ids) {
    Graph g;
    for (Id i : ids) g.add_node(i, D);
    return g;
}

Signature sig(std::set<std::string> v, std::set<std::string> e) { return Signature{std::move(v), std::move(e)}; }

GtSystem system(std::string name, Signature s, std::vector<Rule> rules) {
    GtSystem sys{std::move(name), std::move(s), std::move(rules)};
    auto defects = validate_system(sys);
    if (!defects.empty()) throw Error("malformed built-in system: " + defects.front());
    return sys;
}

// ---------------------------------------------------------------- series-parallel

Grammar sp_grammar() {
    Grammar g;
    g.name = "sp";
    g.signature = sig({D}, {U});
    // s: an edge becomes a path of length two; p: an edge becomes two parallel edges.
    g.rules.push_back(rule("s", make_graph({{1, D}, {2, D}}, {{10, 1, 2, U}}), dots({1, 2}),
                           make_graph({{1, D}, {2, D}, {3, D}}, {{11, 1, 3, U}, {12, 3, 2, U}})));
    g.rules.push_back(rule("p", make_graph({{1, D}, {2, D}}, {{10, 1, 2, U}}), dots({1, 2}),
                           make_graph({{1, D}, {2, D}}, {{11, 1, 2, U}, {12, 1, 2, U}})));
    g.start = make_graph({{1, D}, {2, D}}, {{3, 1, 2, U}});
    return g;
}

Rule sequential(const std::string& name, const std::string& x, const std::string& y) {
    return rule(name, make_graph({{1, D}, {2, D}, {3, D}}, {{10, 1, 3, x}, {11, 3, 2, y}}), dots({1, 2}),
                make_graph({{1, D}, {2, D}}, {{12, 1, 2, "a"}}));
}

Rule parallel(const std::string& name, const std::string& x, const std::string& y) {
    return rule(name, make_graph({{1, D}, {2, D}}, {{10, 1, 2, x}, {11, 1, 2, y}}), dots({1, 2}),
                make_graph({{1, D}, {2, D}}, {{12, 1, 2, "a"}}));
}

std::vector<Rule> sequential_rules() {
    return {sequential("s1", "a", "a"), sequential("s2", "a", "b"), sequential("s3", "b", "a"),
            sequential("s4", "b", "b")};
}

// ---------------------------------------------------------------- extended flow diagrams

const std::string DOT = "dot";
const std::string BOX = "box";
const std::string DIA = "diamond";

Grammar efd_grammar() {
    Grammar g;
    g.name = "efd";
    g.signature = sig({DOT, BOX, DIA}, {"t", "f", U});
    Graph stmt = make_graph({{1, DOT}, {2, DOT}, {3, BOX}}, {{20, 1, 3, U}, {21, 3, 2, U}});
    Graph ends = make_graph({{1, DOT}, {2, DOT}});
    // seq: a statement becomes two statements in sequence; the original box
    // stays first.
    g.rules.push_back(rule("seq", stmt, make_graph({{1, DOT}, {2, DOT}, {3, BOX}}),
                           make_graph({{1, DOT}, {2, DOT}, {3, BOX}, {5, DOT}, {6, BOX}},
                                      {{30, 1, 3, U}, {31, 3, 5, U}, {32, 5, 6, U}, {33, 6, 2, U}})));
    // while: a statement becomes a loop whose true branch returns to its entry.
    g.rules.push_back(rule("while", stmt, ends,
                           make_graph({{1, DOT}, {2, DOT}, {4, DIA}},
                                      {{30, 1, 4, U}, {31, 4, 1, "t"}, {32, 4, 2, "f"}})));
    // ddec: a statement becomes a decision with two empty branches.
    g.rules.push_back(rule("ddec", stmt, ends,
                           make_graph({{1, DOT}, {2, DOT}, {4, DIA}},
                                      {{30, 1, 4, U}, {31, 4, 2, "t"}, {32, 4, 2, "f"}})));
    // dec1 / dec2: a statement is inserted into the true / false branch.
    for (const auto& [name, lab] : {std::pair{"dec1", "t"}, std::pair{"dec2", "f"}}) {
        g.rules.push_back(rule(name, make_graph({{1, DIA}, {2, DOT}}, {{20, 1, 2, lab}}),
                               make_graph({{1, DIA}, {2, DOT}}),
                               make_graph({{1, DIA}, {2, DOT}, {4, DOT}, {5, BOX}},
                                          {{30, 1, 4, lab}, {31, 4, 5, U}, {32, 5, 2, U}})));
    }
    g.start = make_graph({{1, DOT}, {2, BOX}, {3, DOT}}, {{4, 1, 2, U}, {5, 2, 3, U}});
    return g;
}

LanguagePredicate eg0_predicate() {
    // The language itself: single paths with at least two edges.
    LanguagePredicate p = builtin("linear_forest");
    p.language_membership = [closure = p.membership](const Graph& g) {
        return closure(g) && g.edge_count() >= 2 && g.edge_count() + 1 == g.node_count();
    };
    return p;
}

LanguagePredicate eg3_predicate() {
    // The language itself: trees carrying exactly one loop.
    LanguagePredicate p = builtin("loop_forest");
    p.language_membership = [closure = p.membership](const Graph& g) {
        std::size_t loops = 0;
        for (const auto& e : g.edges()) loops += e.src == e.tgt;
        return closure(g) && loops == 1 && g.edge_count() == g.node_count();
    };
    return p;
}

Assumptions assume(Assumptions::Termination t, Assumptions::Closedness c) {
    Assumptions a;
    a.termination = t;
    a.closedness = c;
    return a;
}

using T = Assumptions::Termination;
using C = Assumptions::Closedness;

}  // namespace

std::vector<std::string> case_study_names() {
    return {"sp", "lsp", "efd", "eg_a", "eg_b", "eg_0", "eg_1", "eg_2", "eg_3", "eg_4", "eg_6", "eg_sub"};
}

CaseStudy build(const std::string& name) {
    CaseStudy cs;
    cs.name = name;
    if (name == "sp") {
        cs.description = "series-parallel graphs, generation rules reversed";
        cs.grammar = sp_grammar();
        cs.recognizer = grammar_to_recognizer(*cs.grammar);
        cs.system = cs.recognizer->system;
        cs.predicate = builtin("all");
        cs.assumptions = assume(T::SizeReducing, C::Asserted);
        cs.expected = {4, 4, Conclusion::ConfluentUpToGarbage};
    } else if (name == "lsp") {
        cs.description = "series-parallel graphs over edge labels a, b";
        auto rules = sequential_rules();
        for (auto& r : {parallel("p1", "a", "a"), parallel("p2", "a", "b"), parallel("p3", "b", "b")})
            rules.push_back(r);
        cs.system = system("lsp", sig({D}, {"a", "b"}), rules);
        RecognizerSpec spec;
        spec.system = cs.system;
        spec.accepting = {make_graph({{1, D}, {2, D}}, {{3, 1, 2, "a"}}),
                          make_graph({{1, D}, {2, D}}, {{3, 1, 2, "b"}})};
        spec.input_signature = cs.system.signature;
        cs.recognizer = spec;
        cs.predicate = builtin("acyclic");
        cs.assumptions = assume(T::SizeReducing, C::Probed);
        cs.notes.push_back(
            "acyclic graphs contain the language; confluence up to garbage on acyclic graphs "
            "carries over to the language");
        cs.expected = {26, 18, Conclusion::ConfluentUpToGarbage};
    } else if (name == "efd") {
        cs.description = "extended flow diagrams, generation rules reversed";
        cs.grammar = efd_grammar();
        cs.recognizer = grammar_to_recognizer(*cs.grammar);
        cs.system = cs.recognizer->system;
        cs.predicate = builtin("efd_t_cycle");
        cs.assumptions = assume(T::SizeReducing, C::Asserted);
        cs.expected = {10, 8, Conclusion::ConfluentUpToGarbage};
    } else if (name == "eg_a") {
        cs.description = "edge deletion and node-and-edge deletion";
        Graph l = make_graph({{1, D}, {2, D}}, {{3, 1, 2, U}});
        cs.system = system("eg_a", sig({D}, {U}),
                           {rule("r1", l, dots({1, 2}), dots({1, 2})), rule("r2", l, dots({1}), dots({1}))});
        cs.predicate = builtin("discrete");
        cs.assumptions = assume(T::SizeReducing, C::Probed);
        cs.expected = {1, 0, Conclusion::ConfluentUpToGarbage};
    } else if (name == "eg_b" || name == "eg_4") {
        cs.description = "sequential composition over edge labels a, b";
        cs.system = system(name, sig({D}, {"a", "b"}), sequential_rules());
        cs.predicate = builtin("acyclic");
        cs.assumptions = assume(T::SizeReducing, C::Probed);
        cs.expected = {16, 8, Conclusion::ConfluentUpToGarbage};
    } else if (name == "eg_0") {
        cs.description = "linked lists: last-node deletion plus rules that never fire on lists";
        Graph l = make_graph({{1, D}, {2, D}}, {{3, 1, 2, U}});
        Graph loop1 = make_graph({{4, D}}, {{5, 4, 4, U}});
        Graph loop2 = make_graph({{4, D}}, {{5, 4, 4, U}, {6, 4, 4, U}});
        cs.system = system("eg_0", sig({D}, {U}),
                           {rule("r1", l, dots({1}), dots({1})), rule("r2", l, Graph{}, loop1),
                            rule("r3", l, Graph{}, loop2)});
        cs.predicate = eg0_predicate();
        cs.mode = Mode::Subcommutativity;
        cs.expected = {3, 3, Conclusion::Inconclusive};
    } else if (name == "eg_1") {
        cs.description = "an a-edge becomes a b-loop on either end";
        Graph l = make_graph({{1, D}, {2, D}}, {{3, 1, 2, "a"}});
        cs.system = system("eg_1", sig({D}, {"a", "b"}),
                           {rule("r1", l, dots({1, 2}), make_graph({{1, D}, {2, D}}, {{4, 1, 1, "b"}})),
                            rule("r2", l, dots({1, 2}), make_graph({{1, D}, {2, D}}, {{4, 2, 2, "b"}}))});
        cs.predicate = builtin("all");
        cs.expected = {1, 1, Conclusion::Inconclusive};
    } else if (name == "eg_2") {
        cs.description = "loop removal and edge removal";
        cs.system = system(
            "eg_2", sig({D}, {U}),
            {rule("r1", make_graph({{1, D}, {2, D}}, {{3, 1, 1, U}, {4, 2, 2, U}}), dots({1, 2}),
                  make_graph({{1, D}, {2, D}}, {{5, 1, 1, U}})),
             rule("r2", make_graph({{1, D}}, {{3, 1, 1, U}, {4, 1, 1, U}}), dots({1}),
                  make_graph({{1, D}}, {{5, 1, 1, U}})),
             rule("r3", make_graph({{1, D}, {2, D}}, {{3, 1, 2, U}}), dots({1, 2}), dots({1, 2}))});
        cs.predicate = builtin("all");
        cs.assumptions = assume(T::SizeReducing, C::Asserted);
        cs.expected = {13, 13, Conclusion::Inconclusive};
    } else if (name == "eg_3") {
        cs.description = "a loop travelling along the edges of a tree";
        cs.system = system(
            "eg_3", sig({D}, {U}),
            {rule("r1", make_graph({{1, D}, {2, D}}, {{3, 1, 1, U}, {4, 1, 2, U}}), dots({1, 2}),
                  make_graph({{1, D}, {2, D}}, {{5, 1, 2, U}, {6, 2, 2, U}})),
             rule("r2", make_graph({{1, D}, {2, D}}, {{3, 1, 2, U}, {4, 2, 2, U}}), dots({1}),
                  make_graph({{1, D}}, {{5, 1, 1, U}}))});
        cs.predicate = eg3_predicate();
        cs.expected = {4, 1, Conclusion::Inconclusive};
    } else if (name == "eg_6") {
        cs.description = "directed triangles collapse to looped nodes";
        Graph tri = directed_cycle(3);
        cs.system = system("eg_6", sig({D}, {U}),
                           {rule("r1", tri, Graph{}, make_graph({{7, D}}, {{8, 7, 7, U}})),
                            rule("r2", tri, Graph{}, make_graph({{7, D}}, {{8, 7, 7, U}, {9, 7, 7, U}}))});
        cs.predicate = type_graph_predicate("two_colourable_type_graph", two_cycle_type_graph());
        cs.assumptions = assume(T::SizeReducing, C::Asserted);
        cs.expected = {5, 0, Conclusion::ConfluentUpToGarbage};
    } else if (name == "eg_sub") {
        cs.description = "node creation and deletion, not terminating";
        cs.system = system("eg_sub", sig({D}, {U}),
                           {rule("r1", dots({1}), dots({1}), dots({1, 2})), rule("r2", dots({1}), Graph{}, dots({2, 3})),
                            rule("r3", make_graph({{1, D}}, {{2, 1, 1, U}}), Graph{}, Graph{})});
        cs.predicate = builtin("discrete");
        cs.mode = Mode::Subcommutativity;
        cs.expected = {2, 1, Conclusion::SubcommutativeUpToGarbage};
    } else {
        throw Error("unknown case study '" + name + "'");
    }
    if (cs.system.rules.empty() && cs.recognizer) cs.system = cs.recognizer->system;
    return cs;
}

Graph sample_graph(const std::string& name) {
    if (name == "sp_example") {
        // Source a = 1, sink m = 11.
        enum : Id { a = 1, b, c, d, e, f, g, i, j, l, m };
        return make_graph({{a, D}, {b, D}, {c, D}, {d, D}, {e, D}, {f, D}, {g, D}, {i, D}, {j, D}, {l, D}, {m, D}},
                          {{20, a, b, U}, {21, a, b, U}, {22, a, e, U}, {23, b, d, U}, {24, a, c, U},
                           {25, c, f, U}, {26, d, g, U}, {27, d, m, U}, {28, e, i, U}, {29, f, i, U},
                           {30, g, j, U}, {31, i, m, U}, {32, j, l, U}, {33, j, l, U}, {34, l, m, U}});
    }
    if (name == "eg1_counterexample")
        return make_graph({{1, D}, {2, D}}, {{3, 1, 2, "a"}, {4, 2, 1, "b"}});
    if (name == "egb_cycle")
        return make_graph({{1, D}, {2, D}, {3, D}}, {{4, 1, 2, "a"}, {5, 2, 3, "a"}, {6, 3, 1, "b"}});
    if (name == "triangle") return directed_cycle(3);
    if (name == "two_cycle") return directed_cycle(2);
    if (name == "efd_example") {
        // while (c) { s1; if (d) s2 }
        return make_graph({{1, DOT}, {2, DIA}, {3, DOT}, {4, BOX}, {5, DOT}, {6, DIA}, {7, DOT}, {8, BOX},
                           {9, DOT}},
                          {{20, 1, 2, U}, {21, 2, 3, "t"}, {22, 3, 4, U}, {23, 4, 5, U}, {24, 5, 6, U},
                           {25, 6, 7, "t"}, {26, 7, 8, U}, {27, 8, 1, U}, {28, 6, 1, "f"}, {29, 2, 9, "f"}});
    }
    const std::string prefix = "path(";
    if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
        std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return directed_path(std::stoul(digits));
    }
    throw Error("unknown sample graph '" + name + "'");
}

}  // namespace gtx
