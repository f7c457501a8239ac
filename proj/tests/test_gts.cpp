#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gtx/gts.hpp"
#include "gtx/render.hpp"

using namespace gtx;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kSmall = R"(system small
# a comment
signature
  nodes dot
  edges plain

graph P
  node s dot
  node t dot
  edge e s t plain

rule shrink
  lhs
    node 1 dot
    node 2 dot
    node 3 dot
    edge 4 1 2 plain
    edge 5 2 3 plain
  interface
    node 1 dot
    node 3 dot
  rhs
    node 1 dot
    node 3 dot
    edge 6 1 3 plain

accept P
predicate acyclic
)";

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
    try {
        parse_gts(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("no parse error");
    return {0, 0};
}

}  // namespace

TEST_CASE("parsing a small document") {
    const auto doc = parse_gts(kSmall);
    CHECK(doc.name == "small");
    REQUIRE(doc.graphs.size() == 1);
    const Graph& p = doc.graph("P");
    CHECK(p.node_count() == 2);
    CHECK(p.edge_count() == 1);
    CHECK(isomorphic(p, directed_path(2)));
    REQUIRE(doc.rules.size() == 1);
    CHECK(validate_rule(doc.rules[0]).empty());
    CHECK(doc.accept == std::vector<std::string>{"P"});
    CHECK(doc.language().name == "acyclic");
    const auto spec = doc.recognizer();
    REQUIRE(spec);
    CHECK(recognize(*spec, directed_path(4)).accepted);
    CHECK_FALSE(recognize(*spec, directed_cycle(3)).accepted);
    CHECK(parse_gts(serialize(doc)) == doc);
}

TEST_CASE("parse errors carry line and column") {
    CHECK(error_position("system x\ngraph G\n  node 1 dot\n  edge 2 1 9 plain\n") == std::pair<std::size_t, std::size_t>{4, 12});
    CHECK(error_position("system x\nbogus\n").first == 2);
    CHECK(error_position("system x\ngraph G\n  node 1 dot\n  node 1 dot\n").first == 4);
    CHECK(error_position("system x\nsignature\n  nodes dot\n  edges a\ngraph G\n  node 1 box\n").first == 6);
    CHECK(error_position("system x\naccept Nowhere\n").first == 2);
    // interface item missing from the left-hand side
    CHECK(error_position("system x\nrule r\n  lhs\n    node 1 dot\n  interface\n    node 2 dot\n  rhs\n    node 2 dot\n")
              .first > 0);
}

TEST_CASE("case study documents round-trip and match the shipped files") {
    for (const auto& name : case_study_names()) {
        const auto cs = build(name);
        const auto doc = document_for(cs);
        const auto text = serialize(doc);
        INFO(name);
        CHECK(parse_gts(text) == doc);
        CHECK(read_file(std::string(GTX_DATA_DIR) + "/" + name + ".gts") == text);
        // The document analyses to the same system.
        CHECK(enumerate_critical_pairs(doc.reduction_system()).size() == cs.expected.pairs);
    }
}

TEST_CASE("DOT export of single graphs") {
    CHECK(export_dot(Graph{}) == "digraph {\n}\n");
    CHECK(export_dot(directed_path(2)) ==
          "digraph {\n"
          "  n1 [label=\"1: dot\"];\n"
          "  n2 [label=\"2: dot\"];\n"
          "  n1 -> n2 [label=\"e3: plain\"];\n"
          "}\n");
}

TEST_CASE("DOT export of a critical pair") {
    const auto sys = build("eg_1").system;
    const auto pairs = enumerate_critical_pairs(sys);
    REQUIRE(pairs.size() == 1);
    CHECK(export_dot(pairs[0], sys) ==
          "digraph {\n"
          "  subgraph cluster_h1 {\n"
          "    label=\"H1 (r1)\";\n"
          "    h1_n1 [label=\"1: dot\", style=filled, fillcolor=lightgrey];\n"
          "    h1_n2 [label=\"2: dot\", style=filled, fillcolor=lightgrey];\n"
          "    h1_n1 -> h1_n1 [label=\"e4: b\"];\n"
          "  }\n"
          "  subgraph cluster_g {\n"
          "    label=\"G\";\n"
          "    g_n1 [label=\"1: dot\", style=filled, fillcolor=lightgrey];\n"
          "    g_n2 [label=\"2: dot\", style=filled, fillcolor=lightgrey];\n"
          "    g_n1 -> g_n2 [label=\"e3: a\"];\n"
          "  }\n"
          "  subgraph cluster_h2 {\n"
          "    label=\"H2 (r2)\";\n"
          "    h2_n1 [label=\"1: dot\", style=filled, fillcolor=lightgrey];\n"
          "    h2_n2 [label=\"2: dot\", style=filled, fillcolor=lightgrey];\n"
          "    h2_n2 -> h2_n2 [label=\"e4: b\"];\n"
          "  }\n"
          "}\n");
}

TEST_CASE("pair table and summaries") {
    auto run = [](const std::string& name) {
        const auto cs = build(name);
        auto rep = analyze(cs.system, cs.predicate, cs.mode, cs.assumptions);
        SearchOptions opts;
        opts.exhaustive = rep.termination;
        complete_verdicts(rep, cs.system, opts);
        return std::pair{rep, cs.system};
    };
    {
        const auto [rep, sys] = run("eg_1");
        CHECK(pair_table(rep, sys) ==
              "pair  rules  joinable  strongly joinable  strongly subcommutative  non-garbage\n"
              "1     r1/r2  yes       no                 no                       yes\n");
        CHECK(pair_summary(rep) ==
              "1 pair, 0 strongly joinable, pair 1 joinable, not strongly (non-garbage)\n"
              "1 non-garbage, 0 strongly joinable; 0 strongly subcommutative\n");
        // Rendering twice gives the same bytes.
        CHECK(render_report(rep, sys) == render_report(rep, sys));
    }
    {
        const auto [rep, sys] = run("lsp");
        CHECK(pair_summary(rep) ==
              "26 pairs, 20 strongly joinable, pairs 10, 16 joinable, not strongly (garbage), "
              "pairs 4, 6, 12, 14 not joinable (garbage)\n"
              "18 non-garbage, all strongly joinable; all strongly subcommutative\n");
        const auto porcelain = render_porcelain(rep, sys);
        CHECK(porcelain.find("pairs=26\n") != std::string::npos);
        CHECK(porcelain.find("non_garbage=18\n") != std::string::npos);
        CHECK(porcelain.find("conclusion=ConfluentUpToGarbage\n") != std::string::npos);
    }
    {
        const auto [rep, sys] = run("efd");
        CHECK(pair_summary(rep).rfind("10 pairs, 9 strongly joinable, pair 10 not joinable (garbage)\n", 0) == 0);
    }
}
