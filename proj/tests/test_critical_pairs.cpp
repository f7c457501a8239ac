#include <doctest.h>

#include <set>

#include "gtx/case_studies.hpp"
#include "properties.hpp"

using namespace gtx;

namespace {

SearchOptions exhaustive() {
    SearchOptions o;
    o.exhaustive = true;
    return o;
}

struct Tally {
    std::size_t sj = 0, jns = 0, nj = 0, unknown = 0;

    void add(Joinability j) {
        switch (j) {
            case Joinability::StronglyJoinable: ++sj; break;
            case Joinability::JoinableNotStrong: ++jns; break;
            case Joinability::NotJoinable: ++nj; break;
            case Joinability::Unknown: ++unknown; break;
        }
    }
};

}  // namespace

TEST_CASE("critical pair counts and conclusions of the case studies") {
    for (const auto& name : case_study_names()) {
        const auto cs = build(name);
        const auto pairs = enumerate_critical_pairs(cs.system);
        const auto rep = analyze(cs.system, cs.predicate, cs.mode, cs.assumptions);
        INFO(name);
        CHECK(pairs.size() == cs.expected.pairs);
        CHECK(rep.pairs.size() == cs.expected.pairs);
        CHECK(rep.non_garbage_count() == cs.expected.non_garbage);
        CHECK(rep.conclusion == cs.expected.conclusion);
        const auto part = filter_non_garbage(pairs, cs.predicate);
        CHECK(part.garbage.size() + part.non_garbage.size() == pairs.size());
        CHECK(part.non_garbage.size() == cs.expected.non_garbage);
    }
}

TEST_CASE("critical pairs are pairwise non-isomorphic and really conflict") {
    for (const auto& name : case_study_names()) {
        const auto sys = build(name).system;
        const auto pairs = enumerate_critical_pairs(sys);
        INFO(name);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& p = pairs[i];
            CHECK(p.rule1 <= p.rule2);
            CHECK_FALSE(parallel_independent(p.left, p.right));
            CHECK(p.left.host == p.overlap);
            CHECK(p.right.host == p.overlap);
            // The overlap is covered by the two matches.
            std::set<Id> covered;
            for (auto [x, y] : p.left.match.embedding.nodes.entries()) covered.insert(y);
            for (auto [x, y] : p.right.match.embedding.nodes.entries()) covered.insert(y);
            CHECK(covered.size() == p.overlap.node_count());
            CHECK(p.persistent == persistent_nodes(p));
            CHECK(pairs_isomorphic(p, p));
            for (std::size_t j = i + 1; j < pairs.size(); ++j) CHECK_FALSE(pairs_isomorphic(p, pairs[j]));
        }
    }
}

TEST_CASE("every conflict on small hosts embeds a critical pair") {
    for (const auto& sys : props::case_systems()) {
        if (sys.name == "efd") continue;
        const auto o = props::completeness(sys, 3, 3);
        INFO(sys.name << ": " << o.first_failure);
        CHECK(o.failures == 0);
    }
    const auto efd = build("efd").system;
    const auto o = props::completeness(efd, props::gluing_hosts(efd, false));
    INFO(o.first_failure);
    CHECK(o.ok());
}

TEST_CASE("series-parallel pairs are strongly joinable and strongly subcommutative") {
    const auto sys = build("sp").system;
    for (const auto& p : enumerate_critical_pairs(sys)) {
        const auto j = check_strong_joinability(p, sys, exhaustive());
        CHECK(j.kind == Joinability::StronglyJoinable);
        REQUIRE(j.witness);
        CHECK(check_strong_subcommutativity(p, sys).kind == Subcommutativity::StronglySubcommutative);
    }
}

TEST_CASE("join witnesses lead to isomorphic graphs") {
    const auto sys = build("lsp").system;
    for (const auto& p : enumerate_critical_pairs(sys)) {
        const auto j = check_strong_joinability(p, sys, exhaustive());
        if (!j.witness) continue;
        Graph a = p.left.result, b = p.right.result;
        for (const auto& d : j.witness->left_steps) {
            CHECK(canonical_key(d.host) == canonical_key(a));
            a = d.result;
        }
        for (const auto& d : j.witness->right_steps) {
            CHECK(canonical_key(d.host) == canonical_key(b));
            b = d.result;
        }
        CHECK(isomorphic(a, b).has_value());
    }
}

TEST_CASE("extended flow diagram verdicts") {
    const auto cs = build("efd");
    const auto pairs = enumerate_critical_pairs(cs.system);
    REQUIRE(pairs.size() == 10);
    Tally t;
    std::vector<std::size_t> nj;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto k = check_strong_joinability(pairs[i], cs.system, exhaustive()).kind;
        t.add(k);
        if (k == Joinability::NotJoinable) nj.push_back(i);
    }
    CHECK(t.sj == 9);
    CHECK(t.nj == 1);
    REQUIRE(nj.size() == 1);
    CHECK_FALSE(cs.predicate(pairs[nj.front()].overlap));
}

TEST_CASE("sequential composition verdicts by garbage class") {
    const auto cs = build("eg_b");
    Tally garbage, kept;
    for (const auto& p : enumerate_critical_pairs(cs.system)) {
        const auto k = check_strong_joinability(p, cs.system, exhaustive()).kind;
        (cs.predicate(p.overlap) ? kept : garbage).add(k);
    }
    CHECK(kept.sj == 8);
    CHECK(kept.jns + kept.nj + kept.unknown == 0);
    CHECK(garbage.sj == 2);
    CHECK(garbage.jns == 2);
    CHECK(garbage.nj == 4);
}

TEST_CASE("a non-garbage pair that is joinable but not strongly") {
    const auto cs = build("eg_1");
    const auto pairs = enumerate_critical_pairs(cs.system);
    REQUIRE(pairs.size() == 1);
    CHECK(check_strong_joinability(pairs[0], cs.system, exhaustive()).kind == Joinability::JoinableNotStrong);
    const auto rep = analyze(cs.system, cs.predicate, cs.mode, cs.assumptions);
    CHECK(rep.conclusion == Conclusion::Inconclusive);
    // Without termination nothing follows; the probe exhibits a real peak.
    const auto peak = confluence_probe(cs.system, 2, 2);
    REQUIRE(peak);
    CHECK(joinable(peak->left.result, peak->right.result, cs.system, 500) == std::optional<bool>(false));
}

TEST_CASE("conclusions follow the assumptions") {
    const auto cs = build("eg_b");
    Assumptions none;
    CHECK(analyze(cs.system, cs.predicate, Mode::Confluence, none).conclusion ==
          Conclusion::LocallyConfluentUpToGarbage);
    Assumptions term = none;
    term.termination = Assumptions::Termination::Asserted;
    // Termination alone does not lift local confluence to the language.
    CHECK(analyze(cs.system, cs.predicate, Mode::Confluence, term).conclusion ==
          Conclusion::LocallyConfluentUpToGarbage);
    term.closedness = Assumptions::Closedness::Asserted;
    const auto rep = analyze(cs.system, cs.predicate, Mode::Confluence, term);
    CHECK(rep.conclusion == Conclusion::ConfluentUpToGarbage);
    CHECK_FALSE(rep.licence.empty());
    // Everything counts once the predicate accepts every graph.
    CHECK(analyze(cs.system, builtin("all"), Mode::Confluence, term).conclusion ==
          Conclusion::NotLocallyConfluentUpToGarbage);
}

TEST_CASE("subcommutativity mode") {
    const auto cs = build("eg_sub");
    const auto rep = analyze(cs.system, cs.predicate, cs.mode, cs.assumptions);
    CHECK(rep.conclusion == Conclusion::SubcommutativeUpToGarbage);
    for (const auto& p : rep.pairs) {
        CHECK_FALSE(p.joinability);
        REQUIRE(p.subcommutativity);
        if (!p.garbage) CHECK(p.subcommutativity->kind == Subcommutativity::StronglySubcommutative);
    }
}

TEST_CASE("a tiny search budget yields unknown verdicts") {
    const auto sys = build("lsp").system;
    SearchOptions tiny;
    tiny.budget = 1;
    std::size_t unknown = 0;
    for (const auto& p : enumerate_critical_pairs(sys))
        unknown += check_strong_joinability(p, sys, tiny).kind == Joinability::Unknown;
    CHECK(unknown > 0);
}
