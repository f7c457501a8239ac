#include "gtx/dpo.hpp"

#include <cstdlib>
#include <set>

namespace gtx {

std::vector<std::string> validate_rule(const Rule& r) {
    std::vector<std::string> out;
    for (auto& d : validate(r.lhs)) out.push_back(r.name + " lhs: " + d);
    for (auto& d : validate(r.interface)) out.push_back(r.name + " interface: " + d);
    for (auto& d : validate(r.rhs)) out.push_back(r.name + " rhs: " + d);
    auto included = [&](const Graph& side, const char* what) {
        for (const auto& n : r.interface.nodes()) {
            auto i = side.node_index(n.id);
            if (!i)
                out.push_back(r.name + ": interface node " + std::to_string(n.id) + " absent from " + what);
            else if (side.nodes()[*i].label != n.label)
                out.push_back(r.name + ": interface node " + std::to_string(n.id) + " relabelled in " + what);
        }
        for (const auto& e : r.interface.edges()) {
            auto i = side.edge_index(e.id);
            if (!i)
                out.push_back(r.name + ": interface edge " + std::to_string(e.id) + " absent from " + what);
            else if (!(side.edges()[*i] == e))
                out.push_back(r.name + ": interface edge " + std::to_string(e.id) + " differs in " + what);
        }
    };
    included(r.lhs, "lhs");
    included(r.rhs, "rhs");
    // Items of L - K and R - K must not share ids: rhs-only ids are fresh.
    for (const auto& n : r.rhs.nodes())
        if (!r.interface.has_node(n.id) && r.lhs.has_node(n.id))
            out.push_back(r.name + ": node id " + std::to_string(n.id) + " used in lhs and rhs but not interface");
    for (const auto& e : r.rhs.edges())
        if (!r.interface.has_edge(e.id) && r.lhs.has_edge(e.id))
            out.push_back(r.name + ": edge id " + std::to_string(e.id) + " used in lhs and rhs but not interface");
    return out;
}

Rule invert(const Rule& r) { return Rule{r.name, r.rhs, r.interface, r.lhs}; }

std::vector<std::string> validate_system(const GtSystem& sys) {
    std::vector<std::string> out;
    for (const auto& r : sys.rules) {
        for (auto& d : validate_rule(r)) out.push_back(d);
        for (const Graph* g : {&r.lhs, &r.interface, &r.rhs})
            for (auto& d : validate(*g, sys.signature)) {
                if (d.find("not in signature") != std::string::npos) out.push_back(r.name + ": " + d);
            }
    }
    return out;
}

GtSystem invert_system(const GtSystem& sys) {
    GtSystem out{sys.name, sys.signature, {}};
    for (const auto& r : sys.rules) out.rules.push_back(invert(r));
    return out;
}

bool check_dangling(const Rule& r, const Morphism& g, const Graph& host) {
    std::set<Id> deleted;
    for (const auto& n : r.lhs.nodes())
        if (!r.interface.has_node(n.id)) deleted.insert(g.nodes.at(n.id));
    if (deleted.empty()) return true;
    std::set<Id> matched;
    for (auto [a, b] : g.edges.entries()) matched.insert(b);
    for (const auto& e : host.edges())
        if ((deleted.count(e.src) || deleted.count(e.tgt)) && !matched.count(e.id)) return false;
    return true;
}

bool check_dangling(const Match& m, const Graph& host) {
    return check_dangling(*m.rule, m.embedding, host);
}

DirectDerivation apply(const Match& m, const Graph& host) {
    const Rule& r = *m.rule;
    const Morphism& g = m.embedding;
    if (!check_dangling(r, g, host))
        throw DanglingViolation("rule " + r.name + ": dangling condition violated");

    std::set<Id> del_nodes, del_edges;
    for (const auto& n : r.lhs.nodes())
        if (!r.interface.has_node(n.id)) del_nodes.insert(g.nodes.at(n.id));
    for (const auto& e : r.lhs.edges())
        if (!r.interface.has_edge(e.id)) del_edges.insert(g.edges.at(e.id));

    DirectDerivation d;
    d.match = m;
    d.host = host;
    Graph ctx;
    for (const auto& n : host.nodes())
        if (!del_nodes.count(n.id)) ctx.add_node(n.id, n.label);
    for (const auto& e : host.edges())
        if (!del_edges.count(e.id)) ctx.add_edge(e.id, e.src, e.tgt, e.label);
    d.context = ctx;

    Graph res = ctx;
    Id next = host.fresh_id();
    Morphism h;
    h.nodes = IdMap{};
    for (const auto& n : r.rhs.nodes()) {
        if (r.interface.has_node(n.id)) {
            h.nodes.set(n.id, g.nodes.at(n.id));
        } else {
            res.add_node(next, n.label);
            h.nodes.set(n.id, next++);
        }
    }
    for (const auto& e : r.rhs.edges()) {
        if (r.interface.has_edge(e.id)) {
            h.edges.set(e.id, g.edges.at(e.id));
        } else {
            res.add_edge(next, h.nodes.at(e.src), h.nodes.at(e.tgt), e.label);
            h.edges.set(e.id, next++);
        }
    }
    d.result = std::move(res);
    d.comatch = std::move(h);
    d.track = identity_morphism(ctx);
    d.track.partial = true;
    return d;
}

DirectDerivation apply(const Rule& r, const Morphism& g, const Graph& host) {
    return apply(Match{std::make_shared<Rule>(r), 0, g}, host);
}

DirectDerivation derivation_roundtrip(const DirectDerivation& d) {
    auto inv = std::make_shared<Rule>(invert(d.rule()));
    return apply(Match{inv, d.match.rule_index, d.comatch}, d.result);
}

namespace {

std::vector<std::shared_ptr<const Rule>> shared_rules(const GtSystem& sys) {
    std::vector<std::shared_ptr<const Rule>> out;
    for (const auto& r : sys.rules) out.push_back(std::make_shared<Rule>(r));
    return out;
}

}  // namespace

std::vector<DirectDerivation> all_derivations(const Graph& g, const GtSystem& sys) {
    std::vector<DirectDerivation> out;
    auto rules = shared_rules(sys);
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (auto& m : enumerate_monomorphisms(rules[i]->lhs, g))
            if (check_dangling(*rules[i], m, g)) out.push_back(apply(Match{rules[i], i, m}, g));
    return out;
}

std::vector<Successor> successors(const Graph& g, const GtSystem& sys) {
    std::vector<Successor> out;
    std::set<CanonicalKey> seen;
    for (auto& d : all_derivations(g, sys)) {
        auto k = canonical_key(d.result);
        if (seen.insert(k).second) out.push_back({std::move(d), std::move(k)});
    }
    return out;
}

Reduction reduce_to_normal_form(const Graph& g, const GtSystem& sys, const Policy& policy,
                                std::size_t budget) {
    Reduction red;
    red.normal_form = g;
    auto rules = shared_rules(sys);
    while (true) {
        std::optional<DirectDerivation> step;
        if (!policy) {
            for (std::size_t i = 0; i < rules.size() && !step; ++i)
                for (auto& m : enumerate_monomorphisms(rules[i]->lhs, red.normal_form))
                    if (check_dangling(*rules[i], m, red.normal_form)) {
                        step = apply(Match{rules[i], i, m}, red.normal_form);
                        break;
                    }
        } else {
            auto all = all_derivations(red.normal_form, sys);
            if (!all.empty()) {
                std::size_t pick = policy(all.size());
                if (pick >= all.size()) throw Error("policy chose an out-of-range step");
                step = std::move(all[pick]);
            }
        }
        if (!step) return red;
        if (red.trace.size() >= budget)
            throw BudgetExhausted("no normal form within " + std::to_string(budget) + " steps");
        red.normal_form = step->result;
        red.trace.push_back(std::move(*step));
    }
}

std::size_t budget_from_env(std::size_t fallback) {
    if (const char* v = std::getenv("GTX_BUDGET")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    }
    return fallback;
}

}  // namespace gtx
