#include "gtx/critical_pairs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "gtx/enumerate.hpp"

namespace gtx {

namespace {

// Partial injection L1 -> L2 by item index; -1 means "not identified".
struct Relation {
    std::vector<int> nodes;
    std::vector<int> edges;
};

void enumerate_relations(const Graph& l1, const Graph& l2, const std::function<void(const Relation&)>& emit) {
    Relation r;
    r.nodes.assign(l1.node_count(), -1);
    r.edges.assign(l1.edge_count(), -1);
    std::vector<bool> nused(l2.node_count(), false), eused(l2.edge_count(), false);

    std::function<void(std::size_t)> edge_step = [&](std::size_t k) {
        if (k == l1.edge_count()) {
            emit(r);
            return;
        }
        r.edges[k] = -1;
        edge_step(k + 1);
        const Edge& e = l1.edges()[k];
        int s = r.nodes[*l1.node_index(e.src)], t = r.nodes[*l1.node_index(e.tgt)];
        if (s < 0 || t < 0) return;
        for (std::size_t c = 0; c < l2.edge_count(); ++c) {
            const Edge& f = l2.edges()[c];
            if (eused[c] || f.label != e.label) continue;
            if (static_cast<int>(*l2.node_index(f.src)) != s || static_cast<int>(*l2.node_index(f.tgt)) != t)
                continue;
            eused[c] = true;
            r.edges[k] = static_cast<int>(c);
            edge_step(k + 1);
            r.edges[k] = -1;
            eused[c] = false;
        }
    };
    std::function<void(std::size_t)> node_step = [&](std::size_t i) {
        if (i == l1.node_count()) {
            edge_step(0);
            return;
        }
        r.nodes[i] = -1;
        node_step(i + 1);
        for (std::size_t c = 0; c < l2.node_count(); ++c) {
            if (nused[c] || l2.nodes()[c].label != l1.nodes()[i].label) continue;
            nused[c] = true;
            r.nodes[i] = static_cast<int>(c);
            node_step(i + 1);
            r.nodes[i] = -1;
            nused[c] = false;
        }
    };
    node_step(0);
}

Gluing build_gluing(const Graph& l1, const Graph& l2, const Relation& r) {
    Gluing out;
    Id next = 1;
    std::vector<Id> n2(l2.node_count(), -1);
    for (std::size_t i = 0; i < l1.node_count(); ++i) {
        out.overlap.add_node(next, l1.nodes()[i].label);
        out.g1.nodes.set(l1.nodes()[i].id, next);
        if (r.nodes[i] >= 0) n2[r.nodes[i]] = next;
        ++next;
    }
    for (std::size_t i = 0; i < l2.node_count(); ++i) {
        if (n2[i] < 0) {
            out.overlap.add_node(next, l2.nodes()[i].label);
            n2[i] = next++;
        }
        out.g2.nodes.set(l2.nodes()[i].id, n2[i]);
    }
    std::vector<Id> e2(l2.edge_count(), -1);
    for (std::size_t k = 0; k < l1.edge_count(); ++k) {
        const Edge& e = l1.edges()[k];
        out.overlap.add_edge(next, out.g1.nodes.at(e.src), out.g1.nodes.at(e.tgt), e.label);
        out.g1.edges.set(e.id, next);
        if (r.edges[k] >= 0) e2[r.edges[k]] = next;
        ++next;
    }
    for (std::size_t k = 0; k < l2.edge_count(); ++k) {
        const Edge& e = l2.edges()[k];
        if (e2[k] < 0) {
            out.overlap.add_edge(next, out.g2.nodes.at(e.src), out.g2.nodes.at(e.tgt), e.label);
            e2[k] = next++;
        }
        out.g2.edges.set(e.id, e2[k]);
    }
    return out;
}

// Automorphism of L as index permutations.
struct Perm {
    std::vector<int> nodes;
    std::vector<int> edges;
};

// Automorphisms of L that preserve K and whose restriction to K extends to
// an automorphism of R: applying the rule through them changes nothing.
std::vector<Perm> rule_automorphisms(const Rule& r) {
    std::vector<Perm> out;
    auto raut = enumerate_monomorphisms(r.rhs, r.rhs);
    for (const auto& s : enumerate_monomorphisms(r.lhs, r.lhs)) {
        bool keeps = true;
        for (auto [a, b] : s.nodes.entries())
            if (r.interface.has_node(a) != r.interface.has_node(b)) keeps = false;
        for (auto [a, b] : s.edges.entries())
            if (r.interface.has_edge(a) != r.interface.has_edge(b)) keeps = false;
        if (!keeps) continue;
        bool extends = false;
        for (const auto& t : raut) {
            bool agree = true;
            for (const auto& n : r.interface.nodes())
                if (t.nodes.at(n.id) != s.nodes.at(n.id)) agree = false;
            for (const auto& e : r.interface.edges())
                if (t.edges.at(e.id) != s.edges.at(e.id)) agree = false;
            if (agree) {
                extends = true;
                break;
            }
        }
        if (!extends) continue;
        Perm p;
        for (const auto& n : r.lhs.nodes()) p.nodes.push_back(static_cast<int>(*r.lhs.node_index(s.nodes.at(n.id))));
        for (const auto& e : r.lhs.edges()) p.edges.push_back(static_cast<int>(*r.lhs.edge_index(s.edges.at(e.id))));
        out.push_back(std::move(p));
    }
    return out;
}

using PairList = std::vector<std::pair<int, int>>;

std::pair<PairList, PairList> as_pairs(const Relation& r) {
    PairList n, e;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        if (r.nodes[i] >= 0) n.push_back({static_cast<int>(i), r.nodes[i]});
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        if (r.edges[i] >= 0) e.push_back({static_cast<int>(i), r.edges[i]});
    return {n, e};
}

std::pair<PairList, PairList> orbit_key(const Relation& r, const std::vector<Perm>& auts) {
    auto [n, e] = as_pairs(r);
    std::optional<std::pair<PairList, PairList>> best;
    for (int swap = 0; swap < 2; ++swap)
        for (const auto& a : auts)
            for (const auto& b : auts) {
                PairList tn, te;
                for (auto [x, y] : n) {
                    int u = a.nodes[x], v = b.nodes[y];
                    tn.push_back(swap ? std::pair{v, u} : std::pair{u, v});
                }
                for (auto [x, y] : e) {
                    int u = a.edges[x], v = b.edges[y];
                    te.push_back(swap ? std::pair{v, u} : std::pair{u, v});
                }
                std::sort(tn.begin(), tn.end());
                std::sort(te.begin(), te.end());
                std::pair<PairList, PairList> k{tn, te};
                if (!best || k < *best) best = std::move(k);
            }
    return *best;
}

bool is_identity(const Relation& r) {
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        if (r.nodes[i] != static_cast<int>(i)) return false;
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        if (r.edges[i] != static_cast<int>(i)) return false;
    return true;
}

// Some identified item is deleted by one of the rules.
bool conflicting(const Rule& r1, const Rule& r2, const Relation& rel) {
    for (std::size_t i = 0; i < rel.nodes.size(); ++i)
        if (rel.nodes[i] >= 0 && (!r1.interface.has_node(r1.lhs.nodes()[i].id) ||
                                  !r2.interface.has_node(r2.lhs.nodes()[rel.nodes[i]].id)))
            return true;
    for (std::size_t i = 0; i < rel.edges.size(); ++i)
        if (rel.edges[i] >= 0 && (!r1.interface.has_edge(r1.lhs.edges()[i].id) ||
                                  !r2.interface.has_edge(r2.lhs.edges()[rel.edges[i]].id)))
            return true;
    return false;
}

std::set<Id> image_nodes(const Morphism& m) {
    std::set<Id> s;
    for (auto [a, b] : m.nodes.entries()) s.insert(b);
    return s;
}

std::set<Id> image_edges(const Morphism& m) {
    std::set<Id> s;
    for (auto [a, b] : m.edges.entries()) s.insert(b);
    return s;
}

}  // namespace

std::vector<Gluing> enumerate_gluings(const Graph& l1, const Graph& l2) {
    std::vector<Gluing> out;
    enumerate_relations(l1, l2, [&](const Relation& r) { out.push_back(build_gluing(l1, l2, r)); });
    return out;
}

bool parallel_independent(const DirectDerivation& d1, const DirectDerivation& d2) {
    if (!(d1.host == d2.host)) throw Error("parallel_independent: derivations have different hosts");
    auto in_interface_image = [](const DirectDerivation& d, bool node, Id x) {
        const auto& im = node ? d.match.embedding.nodes : d.match.embedding.edges;
        for (auto [a, b] : im.entries())
            if (b == x) return node ? d.rule().interface.has_node(a) : d.rule().interface.has_edge(a);
        return false;
    };
    auto n1 = image_nodes(d1.match.embedding), n2 = image_nodes(d2.match.embedding);
    for (Id x : n1)
        if (n2.count(x) && !(in_interface_image(d1, true, x) && in_interface_image(d2, true, x))) return false;
    auto e1 = image_edges(d1.match.embedding), e2 = image_edges(d2.match.embedding);
    for (Id x : e1)
        if (e2.count(x) && !(in_interface_image(d1, false, x) && in_interface_image(d2, false, x)))
            return false;
    return true;
}

std::vector<Id> persistent_nodes(const CriticalPair& p) {
    std::vector<Id> out;
    for (const auto& n : p.overlap.nodes())
        if (p.left.track.nodes.contains(n.id) && p.right.track.nodes.contains(n.id)) out.push_back(n.id);
    return out;
}

std::vector<CriticalPair> enumerate_critical_pairs(const GtSystem& sys) {
    std::vector<CriticalPair> out;
    std::vector<std::shared_ptr<const Rule>> rules;
    for (const auto& r : sys.rules) rules.push_back(std::make_shared<Rule>(r));
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = i; j < rules.size(); ++j) {
            const Rule& r1 = *rules[i];
            const Rule& r2 = *rules[j];
            std::vector<Perm> auts;
            if (i == j) auts = rule_automorphisms(r1);
            std::set<std::pair<PairList, PairList>> seen;
            enumerate_relations(r1.lhs, r2.lhs, [&](const Relation& rel) {
                if (i == j && is_identity(rel)) return;
                if (!conflicting(r1, r2, rel)) return;
                Gluing gl = build_gluing(r1.lhs, r2.lhs, rel);
                if (!check_dangling(r1, gl.g1, gl.overlap) || !check_dangling(r2, gl.g2, gl.overlap)) return;
                if (i == j && !seen.insert(orbit_key(rel, auts)).second) return;
                CriticalPair p;
                p.rule1 = i;
                p.rule2 = j;
                p.overlap = gl.overlap;
                p.left = apply(Match{rules[i], i, gl.g1}, gl.overlap);
                p.right = apply(Match{rules[j], j, gl.g2}, gl.overlap);
                p.persistent = persistent_nodes(p);
                out.push_back(std::move(p));
            });
        }
    }
    return out;
}

bool pairs_isomorphic(const CriticalPair& p, const CriticalPair& q) {
    if (p.rule1 != q.rule1 || p.rule2 != q.rule2) return false;
    const Graph& g = p.overlap;
    const Graph& h = q.overlap;
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
    // Joint surjectivity pins f down: f(g1(x)) = g1'(x), f(g2(y)) = g2'(y).
    Morphism f;
    auto extend = [&](const Morphism& a, const Morphism& b) {
        for (auto [x, gx] : a.nodes.entries()) {
            Id hx = b.nodes.at(x);
            if (auto cur = f.nodes.get(gx); cur && *cur != hx) return false;
            f.nodes.set(gx, hx);
        }
        for (auto [x, gx] : a.edges.entries()) {
            Id hx = b.edges.at(x);
            if (auto cur = f.edges.get(gx); cur && *cur != hx) return false;
            f.edges.set(gx, hx);
        }
        return true;
    };
    if (!extend(p.left.match.embedding, q.left.match.embedding)) return false;
    if (!extend(p.right.match.embedding, q.right.match.embedding)) return false;
    return is_morphism(f, g, h) && is_injective(f) && is_surjective(f, h);
}

std::string to_string(Joinability j) {
    switch (j) {
        case Joinability::StronglyJoinable: return "StronglyJoinable";
        case Joinability::JoinableNotStrong: return "JoinableNotStrong";
        case Joinability::NotJoinable: return "NotJoinable";
        case Joinability::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(Subcommutativity s) {
    switch (s) {
        case Subcommutativity::StronglySubcommutative: return "StronglySubcommutative";
        case Subcommutativity::NotStronglySubcommutative: return "NotStronglySubcommutative";
        case Subcommutativity::Unknown: return "Unknown";
    }
    return "?";
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::ConfluentUpToGarbage: return "ConfluentUpToGarbage";
        case Conclusion::SubcommutativeUpToGarbage: return "SubcommutativeUpToGarbage";
        case Conclusion::LocallyConfluentUpToGarbage: return "LocallyConfluentUpToGarbage";
        case Conclusion::NotLocallyConfluentUpToGarbage: return "NotLocallyConfluentUpToGarbage";
        case Conclusion::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Mode m) { return m == Mode::Confluence ? "confluence" : "subcommutativity"; }

// ---------------------------------------------------------------- joinability

namespace {

struct SearchState {
    Graph graph;
    int parent = -1;
    std::optional<DirectDerivation> step;
};

// Breadth-first exploration of one side. States are deduplicated by the key
// of the graph with persistent nodes marked, so mark-preserving futures are
// not lost; plain keys are recorded separately for ordinary joinability.
struct Side {
    std::vector<SearchState> states;
    std::deque<int> frontier;
    std::unordered_map<CanonicalKey, int> marked;
    std::unordered_map<CanonicalKey, int> complete;  // all marks present
    std::unordered_map<CanonicalKey, int> plain;
    bool truncated = false;

    std::vector<DirectDerivation> path(int i) const {
        std::vector<DirectDerivation> out;
        for (; i >= 0 && states[i].step; i = states[i].parent) out.push_back(*states[i].step);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

std::vector<std::optional<Id>> present_marks(const Graph& g, const std::vector<Id>& marks, bool& all) {
    std::vector<std::optional<Id>> out;
    all = true;
    for (Id m : marks) {
        if (g.has_node(m))
            out.push_back(m);
        else {
            out.push_back(std::nullopt);
            all = false;
        }
    }
    return out;
}

}  // namespace

JoinVerdict check_strong_joinability(const CriticalPair& p, const GtSystem& sys, const SearchOptions& opts) {
    const std::vector<Id>& marks = p.persistent;
    std::size_t limit = opts.exhaustive ? opts.exhaustive_cap : opts.budget;
    Side sides[2];
    std::optional<std::pair<int, int>> strong, weak;  // state index left, right

    auto add = [&](int s, Graph g, int parent, std::optional<DirectDerivation> step) {
        Side& me = sides[s];
        Side& other = sides[1 - s];
        bool all = false;
        auto pm = present_marks(g, marks, all);
        auto mk = marked_key(g, pm);
        if (me.marked.count(mk)) return;
        if (me.states.size() >= limit) {
            me.truncated = true;
            return;
        }
        int idx = static_cast<int>(me.states.size());
        auto pk = canonical_key(g);
        me.states.push_back({std::move(g), parent, std::move(step)});
        me.marked.emplace(mk, idx);
        me.frontier.push_back(idx);
        if (!me.plain.count(pk)) me.plain.emplace(pk, idx);
        if (!weak)
            if (auto it = other.plain.find(pk); it != other.plain.end())
                weak = s == 0 ? std::pair{idx, it->second} : std::pair{it->second, idx};
        if (all) {
            me.complete.emplace(mk, idx);
            if (!strong)
                if (auto it = other.complete.find(mk); it != other.complete.end())
                    strong = s == 0 ? std::pair{idx, it->second} : std::pair{it->second, idx};
        }
    };

    add(0, p.left.result, -1, std::nullopt);
    add(1, p.right.result, -1, std::nullopt);
    int turn = 0;
    while (!strong && (!sides[0].frontier.empty() || !sides[1].frontier.empty())) {
        Side& me = sides[turn];
        if (!me.frontier.empty()) {
            int idx = me.frontier.front();
            me.frontier.pop_front();
            Graph g = me.states[idx].graph;
            for (auto& d : all_derivations(g, sys)) {
                Graph r = d.result;
                add(turn, std::move(r), idx, std::move(d));
                if (strong) break;
            }
        }
        turn = 1 - turn;
    }

    JoinVerdict v;
    v.explored_left = sides[0].states.size();
    v.explored_right = sides[1].states.size();
    auto witness = [&](std::pair<int, int> w) {
        return JoinWitness{sides[0].path(w.first), sides[1].path(w.second)};
    };
    bool cut = sides[0].truncated || sides[1].truncated;
    if (strong) {
        v.kind = Joinability::StronglyJoinable;
        v.witness = witness(*strong);
    } else if (cut) {
        v.kind = Joinability::Unknown;
        if (weak) v.witness = witness(*weak);
    } else if (weak) {
        v.kind = Joinability::JoinableNotStrong;
        v.witness = witness(*weak);
    } else {
        v.kind = Joinability::NotJoinable;
    }
    return v;
}

SubcommutativityVerdict check_strong_subcommutativity(const CriticalPair& p, const GtSystem& sys) {
    struct Cand {
        CanonicalKey key;
        std::vector<DirectDerivation> steps;
    };
    auto collect = [&](const Graph& h) {
        std::vector<Cand> out;
        bool all = false;
        auto pm = present_marks(h, p.persistent, all);
        if (all) out.push_back({marked_key(h, pm), {}});
        for (auto& d : all_derivations(h, sys)) {
            pm = present_marks(d.result, p.persistent, all);
            if (all) out.push_back({marked_key(d.result, pm), {d}});
        }
        return out;
    };
    auto left = collect(p.left.result);
    auto right = collect(p.right.result);
    std::unordered_map<CanonicalKey, std::size_t> rk;
    for (std::size_t i = 0; i < right.size(); ++i) rk.emplace(right[i].key, i);
    SubcommutativityVerdict v;
    v.kind = Subcommutativity::NotStronglySubcommutative;
    for (const auto& c : left) {
        auto it = rk.find(c.key);
        if (it != rk.end()) {
            v.kind = Subcommutativity::StronglySubcommutative;
            v.witness = JoinWitness{c.steps, right[it->second].steps};
            break;
        }
    }
    return v;
}

Partition filter_non_garbage(const std::vector<CriticalPair>& pairs, const LanguagePredicate& pred) {
    Partition out;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        (pred(pairs[i].overlap) ? out.non_garbage : out.garbage).push_back(i);
    return out;
}

std::size_t AnalysisReport::non_garbage_count() const {
    std::size_t n = 0;
    for (const auto& p : pairs) n += !p.garbage;
    return n;
}

AnalysisReport analyze(const GtSystem& sys, const LanguagePredicate& pred, Mode mode,
                       const Assumptions& as) {
    AnalysisReport rep;
    rep.system = sys.name;
    rep.predicate = pred.name;
    rep.mode = mode;

    switch (as.termination) {
        case Assumptions::Termination::Absent:
            rep.termination_basis = "absent";
            break;
        case Assumptions::Termination::Asserted:
            rep.termination = true;
            rep.termination_basis = "asserted";
            break;
        case Assumptions::Termination::SizeReducing:
            rep.termination = check_size_reducing(sys);
            rep.termination_basis = rep.termination ? "size-reducing rules" : "size-reducing check failed";
            break;
    }
    switch (as.closedness) {
        case Assumptions::Closedness::Absent:
            rep.closedness_basis = "absent";
            break;
        case Assumptions::Closedness::Asserted:
            rep.closedness = true;
            rep.closedness_basis = "asserted";
            break;
        case Assumptions::Closedness::Probed: {
            auto viol = closedness_probe(sys, pred, as.probe_nodes, as.probe_edges);
            rep.closedness = viol.empty();
            rep.closedness_basis = "probed up to " + std::to_string(as.probe_nodes) + " nodes and " +
                                   std::to_string(as.probe_edges) + " edges";
            if (!viol.empty()) {
                rep.closedness_basis += ": violated by rule " + viol.front().rule;
            }
            break;
        }
    }

    SearchOptions opts;
    opts.budget = as.budget;
    opts.exhaustive = rep.termination;
    for (auto& p : enumerate_critical_pairs(sys)) {
        PairReport pr;
        pr.garbage = !pred(p.overlap);
        if (mode == Mode::Confluence)
            pr.joinability = check_strong_joinability(p, sys, opts);
        else
            pr.subcommutativity = check_strong_subcommutativity(p, sys);
        pr.pair = std::move(p);
        rep.pairs.push_back(std::move(pr));
    }

    if (mode == Mode::Confluence) {
        bool all_strong = true, unknown = false;
        std::optional<std::size_t> refuting;
        for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
            const auto& pr = rep.pairs[i];
            if (pr.garbage) continue;
            auto k = pr.joinability->kind;
            if (k != Joinability::StronglyJoinable) all_strong = false;
            if (k == Joinability::Unknown) unknown = true;
            if (k == Joinability::NotJoinable && !refuting && pred.in_language(pr.pair.overlap) == true)
                refuting = i;
        }
        if (unknown) {
            rep.conclusion = Conclusion::Inconclusive;
            rep.licence = "a joinability search ran out of budget";
        } else if (all_strong && rep.termination && rep.closedness) {
            rep.conclusion = Conclusion::ConfluentUpToGarbage;
            rep.licence = "non-garbage critical pairs strongly joinable, closedness and termination up to "
                          "garbage: generalised critical pair lemma with generalised Newman's lemma";
        } else if (all_strong) {
            rep.conclusion = Conclusion::LocallyConfluentUpToGarbage;
            rep.licence = "non-garbage critical pairs strongly joinable: generalised critical pair lemma";
        } else if (refuting) {
            rep.conclusion = Conclusion::NotLocallyConfluentUpToGarbage;
            rep.witness = refuting;
            rep.licence = "a non-joinable critical pair whose overlap lies in the language";
        } else {
            rep.conclusion = Conclusion::Inconclusive;
            rep.licence = "some non-garbage critical pair is not strongly joinable";
            for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
                const auto& pr = rep.pairs[i];
                if (!pr.garbage && pr.joinability->kind == Joinability::NotJoinable) {
                    rep.notes.push_back("pair " + std::to_string(i + 1) +
                                        " is not joinable but its overlap is not known to be in the "
                                        "language itself");
                }
            }
        }
    } else {
        bool all_sub = true;
        for (const auto& pr : rep.pairs)
            if (!pr.garbage && pr.subcommutativity->kind != Subcommutativity::StronglySubcommutative)
                all_sub = false;
        if (all_sub && rep.closedness) {
            rep.conclusion = Conclusion::ConfluentUpToGarbage;
            rep.licence = "non-garbage critical pairs strongly subcommutative and closedness: "
                          "subcommutative, hence confluent, up to garbage";
        } else if (all_sub) {
            rep.conclusion = Conclusion::SubcommutativeUpToGarbage;
            rep.licence = "non-garbage critical pairs strongly subcommutative";
        } else {
            rep.conclusion = Conclusion::Inconclusive;
            rep.licence = "some non-garbage critical pair is not strongly subcommutative";
        }
    }
    return rep;
}

// ---------------------------------------------------------------- probing

std::optional<bool> joinable(const Graph& a, const Graph& b, const GtSystem& sys, std::size_t budget) {
    std::unordered_map<CanonicalKey, int> seen[2];
    std::deque<Graph> frontier[2];
    bool cut = false;
    auto add = [&](int s, const Graph& g) {
        auto k = canonical_key(g);
        if (seen[s].count(k)) return false;
        if (seen[s].size() >= budget) {
            cut = true;
            return false;
        }
        seen[s].emplace(k, 0);
        frontier[s].push_back(g);
        return seen[1 - s].count(k) > 0;
    };
    if (add(0, a) || add(1, b)) return true;
    int turn = 0;
    while (!frontier[0].empty() || !frontier[1].empty()) {
        if (!frontier[turn].empty()) {
            Graph g = std::move(frontier[turn].front());
            frontier[turn].pop_front();
            for (auto& s : successors(g, sys))
                if (add(turn, s.derivation.result)) return true;
        }
        turn = 1 - turn;
    }
    if (cut) return std::nullopt;
    return false;
}

std::optional<ProbeCounterexample> confluence_probe(const GtSystem& sys, std::size_t max_nodes,
                                                    std::size_t max_edges, std::size_t budget) {
    if (sys.rules.empty()) return std::nullopt;
    std::vector<const Graph*> gs;
    for (const auto& r : sys.rules) gs.insert(gs.end(), {&r.lhs, &r.rhs});
    auto [vl, el] = labels_of(sys.signature, gs);
    std::optional<ProbeCounterexample> found;
    bool undecided = false;
    for_each_graph(vl, el, max_nodes, max_edges, [&](const Graph& g) {
        auto succ = successors(g, sys);
        for (std::size_t i = 0; i < succ.size(); ++i)
            for (std::size_t j = i + 1; j < succ.size(); ++j) {
                auto r = joinable(succ[i].derivation.result, succ[j].derivation.result, sys, budget);
                if (!r) {
                    undecided = true;
                } else if (!*r) {
                    found = ProbeCounterexample{g, succ[i].derivation, succ[j].derivation};
                    return false;
                }
            }
        return true;
    });
    if (!found && undecided) throw BudgetExhausted("confluence probe: some peak undecided within budget");
    return found;
}

}  // namespace gtx
