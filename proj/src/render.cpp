#include "gtx/render.hpp"

#include <algorithm>
#include <sstream>

#include "gtx/gts.hpp"

namespace gtx {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void dot_body(std::ostringstream& os, const Graph& g, const std::string& prefix, const std::string& indent,
              const std::vector<Id>& highlighted) {
    for (const auto& n : g.nodes()) {
        os << indent << prefix << "n" << n.id << " [label="
           << quoted(std::to_string(n.id) + ": " + label_name(n.label));
        if (std::binary_search(highlighted.begin(), highlighted.end(), n.id))
            os << ", style=filled, fillcolor=lightgrey";
        os << "];\n";
    }
    for (const auto& e : g.edges()) {
        os << indent << prefix << "n" << e.src << " -> " << prefix << "n" << e.tgt
           << " [label=" << quoted("e" + std::to_string(e.id) + ": " + label_name(e.label)) << "];\n";
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string joinable_cell(const PairReport& p) {
    if (!p.joinability) return "-";
    switch (p.joinability->kind) {
        case Joinability::StronglyJoinable:
        case Joinability::JoinableNotStrong:
            return "yes";
        case Joinability::NotJoinable:
            return "no";
        case Joinability::Unknown:
            return "?";
    }
    return "?";
}

std::string strongly_joinable_cell(const PairReport& p) {
    if (!p.joinability) return "-";
    switch (p.joinability->kind) {
        case Joinability::StronglyJoinable:
            return "yes";
        case Joinability::JoinableNotStrong:
        case Joinability::NotJoinable:
            return "no";
        case Joinability::Unknown:
            return "?";
    }
    return "?";
}

std::string subcommutative_cell(const PairReport& p) {
    if (!p.subcommutativity) return "-";
    switch (p.subcommutativity->kind) {
        case Subcommutativity::StronglySubcommutative:
            return "yes";
        case Subcommutativity::NotStronglySubcommutative:
            return "no";
        case Subcommutativity::Unknown:
            return "?";
    }
    return "?";
}

std::string rules_cell(const PairReport& p, const GtSystem& sys) {
    return sys.rules.at(p.pair.rule1).name + "/" + sys.rules.at(p.pair.rule2).name;
}

// "pair 3" or "pairs 3, 5".
std::string pair_list(const std::vector<std::size_t>& ids) {
    std::string s = ids.size() == 1 ? "pair " : "pairs ";
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + std::to_string(ids[i] + 1);
    return s;
}

std::string join_ids(const std::vector<Id>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
    return s;
}

}  // namespace

std::string export_dot(const Graph& g) {
    std::ostringstream os;
    os << "digraph {\n";
    dot_body(os, g, "", "  ", {});
    os << "}\n";
    return os.str();
}

std::string export_dot(const CriticalPair& p, const GtSystem& sys) {
    const auto& persistent = p.persistent;
    struct Part {
        std::string id;
        std::string title;
        const Graph* graph;
    };
    const Part parts[] = {
        {"h1", "H1 (" + sys.rules.at(p.rule1).name + ")", &p.left.result},
        {"g", "G", &p.overlap},
        {"h2", "H2 (" + sys.rules.at(p.rule2).name + ")", &p.right.result},
    };
    std::ostringstream os;
    os << "digraph {\n";
    for (const auto& part : parts) {
        os << "  subgraph cluster_" << part.id << " {\n";
        os << "    label=" << quoted(part.title) << ";\n";
        dot_body(os, *part.graph, part.id + "_", "    ", persistent);
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

void complete_verdicts(AnalysisReport& rep, const GtSystem& sys, const SearchOptions& opts) {
    for (auto& p : rep.pairs) {
        if (!p.joinability) p.joinability = check_strong_joinability(p.pair, sys, opts);
        if (!p.subcommutativity) p.subcommutativity = check_strong_subcommutativity(p.pair, sys);
    }
}

std::string pair_table(const AnalysisReport& rep, const GtSystem& sys) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"pair", "rules", "joinable", "strongly joinable", "strongly subcommutative", "non-garbage"});
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto& p = rep.pairs[i];
        rows.push_back({std::to_string(i + 1), rules_cell(p, sys), joinable_cell(p), strongly_joinable_cell(p),
                        subcommutative_cell(p), yes_no(!p.garbage)});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        os << line << "\n";
    }
    return os.str();
}

std::string pair_summary(const AnalysisReport& rep) {
    std::ostringstream os;
    const auto n = rep.pairs.size();
    const bool have_join = std::all_of(rep.pairs.begin(), rep.pairs.end(),
                                       [](const PairReport& p) { return p.joinability.has_value(); });
    const bool have_sub = std::all_of(rep.pairs.begin(), rep.pairs.end(),
                                      [](const PairReport& p) { return p.subcommutativity.has_value(); });

    os << n << (n == 1 ? " pair" : " pairs");
    if (have_join) {
        std::size_t strong = 0;
        // Grouped by verdict, then by garbage status, in pair order.
        const std::pair<Joinability, std::string> kinds[] = {
            {Joinability::JoinableNotStrong, "joinable, not strongly"},
            {Joinability::NotJoinable, "not joinable"},
            {Joinability::Unknown, "undecided"},
        };
        for (const auto& p : rep.pairs) strong += p.joinability->kind == Joinability::StronglyJoinable;
        os << ", " << strong << " strongly joinable";
        for (const auto& [kind, text] : kinds) {
            for (bool garbage : {false, true}) {
                std::vector<std::size_t> ids;
                for (std::size_t i = 0; i < n; ++i)
                    if (rep.pairs[i].joinability->kind == kind && rep.pairs[i].garbage == garbage) ids.push_back(i);
                if (!ids.empty())
                    os << ", " << pair_list(ids) << " " << text << (garbage ? " (garbage)" : " (non-garbage)");
            }
        }
    } else if (have_sub) {
        std::size_t sub = 0;
        for (const auto& p : rep.pairs)
            sub += p.subcommutativity->kind == Subcommutativity::StronglySubcommutative;
        os << ", " << sub << " strongly subcommutative";
    }
    os << "\n";

    const auto ng = rep.non_garbage_count();
    os << ng << " non-garbage";
    std::vector<std::string> clauses;
    auto clause = [&](std::size_t k, const std::string& what) {
        if (ng == 0) return;
        clauses.push_back((k == ng ? std::string("all") : std::to_string(k)) + " " + what);
    };
    if (have_join) {
        std::size_t k = 0;
        for (const auto& p : rep.pairs) k += !p.garbage && p.joinability->kind == Joinability::StronglyJoinable;
        clause(k, "strongly joinable");
    }
    if (have_sub) {
        std::size_t k = 0;
        for (const auto& p : rep.pairs)
            k += !p.garbage && p.subcommutativity->kind == Subcommutativity::StronglySubcommutative;
        clause(k, "strongly subcommutative");
    }
    for (std::size_t i = 0; i < clauses.size(); ++i) os << (i ? "; " : ", ") << clauses[i];
    os << "\n";
    return os.str();
}

std::string render_report(const AnalysisReport& rep, const GtSystem& sys) {
    std::ostringstream os;
    os << "system: " << rep.system << "\n";
    os << "predicate: " << rep.predicate << "\n";
    os << "mode: " << to_string(rep.mode) << "\n\n";
    os << pair_table(rep, sys) << "\n";
    os << pair_summary(rep) << "\n";
    os << "termination: " << yes_no(rep.termination) << " (" << rep.termination_basis << ")\n";
    os << "closedness: " << yes_no(rep.closedness) << " (" << rep.closedness_basis << ")\n";
    os << "conclusion: " << to_string(rep.conclusion) << "\n";
    os << "licence: " << rep.licence << "\n";
    if (rep.witness) os << "witness: pair " << *rep.witness + 1 << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string render_porcelain(const AnalysisReport& rep, const GtSystem& sys) {
    std::ostringstream os;
    os << "system=" << rep.system << "\n";
    os << "predicate=" << rep.predicate << "\n";
    os << "mode=" << to_string(rep.mode) << "\n";
    os << "pairs=" << rep.pairs.size() << "\n";
    os << "non_garbage=" << rep.non_garbage_count() << "\n";
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto& p = rep.pairs[i];
        const std::string k = "pair." + std::to_string(i + 1) + ".";
        os << k << "rules=" << rules_cell(p, sys) << "\n";
        os << k << "garbage=" << (p.garbage ? "true" : "false") << "\n";
        if (p.joinability) os << k << "joinability=" << to_string(p.joinability->kind) << "\n";
        if (p.subcommutativity) os << k << "subcommutativity=" << to_string(p.subcommutativity->kind) << "\n";
        os << k << "overlap_nodes=" << p.pair.overlap.node_count() << "\n";
        os << k << "overlap_edges=" << p.pair.overlap.edge_count() << "\n";
        os << k << "persistent=" << join_ids(p.pair.persistent) << "\n";
    }
    os << "termination=" << (rep.termination ? "true" : "false") << "\n";
    os << "termination_basis=" << rep.termination_basis << "\n";
    os << "closedness=" << (rep.closedness ? "true" : "false") << "\n";
    os << "closedness_basis=" << rep.closedness_basis << "\n";
    os << "conclusion=" << to_string(rep.conclusion) << "\n";
    if (rep.witness) os << "witness=" << *rep.witness + 1 << "\n";
    return os.str();
}

std::string describe_step(const DirectDerivation& d) {
    std::vector<Id> nodes, edges;
    for (const auto& [from, to] : d.match.embedding.nodes.entries()) nodes.push_back(to);
    for (const auto& [from, to] : d.match.embedding.edges.entries()) edges.push_back(to);
    std::string s = d.rule().name + " (nodes " + join_ids(nodes);
    if (!edges.empty()) s += ", edges " + join_ids(edges);
    return s + ")";
}

std::string render_recognition(const RecognitionResult& r) {
    std::ostringstream os;
    os << (r.accepted ? "accept" : "reject") << "\n";
    os << "trace: " << r.trace.size() << (r.trace.size() == 1 ? " step" : " steps") << "\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) os << "  " << i + 1 << ". " << describe_step(r.trace[i]) << "\n";
    os << "normal form:\n" << serialize_graph("normal_form", r.normal_form);
    return os.str();
}

}  // namespace gtx
