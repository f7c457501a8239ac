// Command-line front end over the gtx library.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 inconclusive analysis
// (only with --strict), 4 search budget exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gtx/gts.hpp"
#include "gtx/render.hpp"

namespace {

using namespace gtx;

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kInconclusive = 3;
constexpr int kBudget = 4;

class UsageError : public Error {
public:
    using Error::Error;
};

struct PredicateOptions {
    std::string builtin;
    std::string type_graph;
    std::vector<std::string> finite;

    void add_to(CLI::App* cmd) {
        auto* p = cmd->add_option("--predicate", builtin, "builtin language predicate");
        auto* t = cmd->add_option("--type-graph", type_graph, "graph of the document used as type graph");
        auto* f = cmd->add_option("--finite", finite, "graphs of the document whose subgraphs form the language")
                      ->delimiter(',');
        p->excludes(t)->excludes(f);
        t->excludes(f);
    }

    LanguagePredicate resolve(const GtsDocument& doc) const {
        try {
            if (!builtin.empty()) return gtx::builtin(builtin);
            if (!type_graph.empty())
                return type_graph_predicate("type-graph " + type_graph, doc.graph(type_graph));
            if (!finite.empty()) {
                std::vector<Graph> members;
                std::string name = "finite";
                for (const auto& n : finite) {
                    members.push_back(doc.graph(n));
                    name += " " + n;
                }
                return finite_closure_predicate(name, std::move(members));
            }
            return doc.language();
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
};

struct InputOptions {
    std::string graph;
    std::string sample;

    void add_to(CLI::App* cmd) {
        auto* i = cmd->add_option("--input", graph, "graph of the document to process");
        auto* s = cmd->add_option("--sample", sample, "built-in sample graph, e.g. sp_example or path(4)");
        i->excludes(s);
    }

    Graph resolve(const GtsDocument& doc) const {
        try {
            if (!graph.empty()) return doc.graph(graph);
            if (!sample.empty()) return sample_graph(sample);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        throw UsageError("one of --input or --sample is required");
    }
};

bool budget_ran_out(const AnalysisReport& rep) {
    for (const auto& p : rep.pairs) {
        if (p.joinability && p.joinability->kind == Joinability::Unknown) return true;
        if (p.subcommutativity && p.subcommutativity->kind == Subcommutativity::Unknown) return true;
    }
    return false;
}

SearchOptions search_options(const GtSystem& sys) {
    SearchOptions opts;
    opts.budget = budget_from_env(opts.budget);
    opts.exhaustive = check_size_reducing(sys);
    return opts;
}

int finish_analysis(const AnalysisReport& rep, bool strict) {
    if (budget_ran_out(rep)) return kBudget;
    if (strict && rep.conclusion == Conclusion::Inconclusive) return kInconclusive;
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Critical pair analysis of graph transformation systems up to garbage"};
    app.require_subcommand(1);

    std::string file;
    bool porcelain = false;
    bool strict = false;

    // critical-pairs
    auto* cp = app.add_subcommand("critical-pairs", "print the critical pair table");
    cp->add_option("file", file, ".gts file")->required();
    PredicateOptions cp_pred;
    cp_pred.add_to(cp);
    cp->add_flag("--porcelain", porcelain, "key=value output");

    // analyze
    auto* an = app.add_subcommand("analyze", "run the confluence or subcommutativity analysis");
    an->add_option("file", file, ".gts file")->required();
    PredicateOptions an_pred;
    an_pred.add_to(an);
    std::string mode_name = "confluence";
    an->add_option("--mode", mode_name, "confluence or subcommutativity")
        ->check(CLI::IsMember({"confluence", "subcommutativity"}));
    bool assume_terminating = false, assume_closed = false;
    std::size_t probe_size = 0;
    an->add_flag("--assume-terminating", assume_terminating, "assert termination up to garbage");
    auto* closed = an->add_flag("--assume-closed", assume_closed, "assert closedness of the language");
    an->add_option("--probe-size", probe_size, "probe closedness on graphs up to N nodes and N edges")
        ->excludes(closed);
    an->add_flag("--strict", strict, "exit 3 when the analysis is inconclusive");
    an->add_flag("--porcelain", porcelain, "key=value output");

    // recognize
    auto* rc = app.add_subcommand("recognize", "decide membership by deterministic reduction");
    rc->add_option("file", file, ".gts file with a grammar or accepting graphs")->required();
    InputOptions rc_in;
    rc_in.add_to(rc);
    bool backtracking = false;
    rc->add_flag("--backtracking", backtracking, "search all reducts instead");

    // reduce
    auto* rd = app.add_subcommand("reduce", "reduce a graph to normal form");
    rd->add_option("file", file, ".gts file")->required();
    InputOptions rd_in;
    rd_in.add_to(rd);

    // invert
    auto* iv = app.add_subcommand("invert", "print the document with every rule inverted");
    iv->add_option("file", file, ".gts file")->required();

    // export-dot
    auto* ed = app.add_subcommand("export-dot", "print a graph or a critical pair in DOT");
    ed->add_option("file", file, ".gts file")->required();
    std::string dot_graph;
    std::size_t dot_pair = 0;
    auto* dg = ed->add_option("--graph", dot_graph, "graph of the document");
    ed->add_option("--pair", dot_pair, "critical pair number as listed by critical-pairs")->excludes(dg);

    // case-study
    auto* cs = app.add_subcommand("case-study", "run a built-in case study end to end");
    std::string cs_name;
    cs->add_option("name", cs_name, "case study name")->required()->check(CLI::IsMember(case_study_names()));
    bool emit = false;
    cs->add_flag("--emit", emit, "print the case study as a .gts document");
    cs->add_flag("--porcelain", porcelain, "key=value output");
    cs->add_flag("--strict", strict, "exit 3 when the analysis is inconclusive");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    try {
        if (*cs) {
            auto study = build(cs_name);
            if (emit) {
                std::cout << serialize(document_for(study));
                return 0;
            }
            auto as = study.assumptions;
            as.budget = budget_from_env(as.budget);
            auto rep = analyze(study.system, study.predicate, study.mode, as);
            const int code = finish_analysis(rep, strict);
            SearchOptions opts;
            opts.budget = as.budget;
            opts.exhaustive = rep.termination;
            complete_verdicts(rep, study.system, opts);
            if (porcelain) {
                std::cout << render_porcelain(rep, study.system);
            } else {
                std::cout << study.name << ": " << study.description << "\n\n" << render_report(rep, study.system);
                for (const auto& n : study.notes) std::cout << "note: " << n << "\n";
            }
            return code;
        }

        const auto doc = parse_gts_file(file);

        if (*cp) {
            const auto sys = doc.reduction_system();
            const auto pred = cp_pred.resolve(doc);
            AnalysisReport rep;
            rep.system = sys.name;
            rep.predicate = pred.name;
            const auto opts = search_options(sys);
            for (auto& p : enumerate_critical_pairs(sys)) {
                PairReport pr;
                pr.garbage = !pred(p.overlap);
                pr.pair = std::move(p);
                rep.pairs.push_back(std::move(pr));
            }
            complete_verdicts(rep, sys, opts);
            if (porcelain) {
                std::cout << render_porcelain(rep, sys);
            } else {
                std::cout << pair_table(rep, sys) << "\n" << pair_summary(rep);
            }
            return budget_ran_out(rep) ? kBudget : 0;
        }

        if (*an) {
            const auto sys = doc.reduction_system();
            const auto pred = an_pred.resolve(doc);
            Assumptions as;
            as.budget = budget_from_env(as.budget);
            as.termination =
                assume_terminating ? Assumptions::Termination::Asserted : Assumptions::Termination::SizeReducing;
            if (assume_closed) {
                as.closedness = Assumptions::Closedness::Asserted;
            } else if (probe_size > 0) {
                as.closedness = Assumptions::Closedness::Probed;
                as.probe_nodes = as.probe_edges = probe_size;
            }
            const auto mode = mode_name == "confluence" ? Mode::Confluence : Mode::Subcommutativity;
            const auto rep = analyze(sys, pred, mode, as);
            std::cout << (porcelain ? render_porcelain(rep, sys) : render_report(rep, sys));
            return finish_analysis(rep, strict);
        }

        if (*rc) {
            const auto spec = doc.recognizer();
            if (!spec) throw UsageError("the document has neither a start graph nor accepting graphs");
            const auto g = rc_in.resolve(doc);
            if (backtracking) {
                const bool ok = recognize_with_backtracking(*spec, g, budget_from_env(100000));
                std::cout << (ok ? "accept" : "reject") << "\n";
                return 0;
            }
            std::cout << render_recognition(recognize(*spec, g, {}, budget_from_env(kDefaultStepBudget)));
            return 0;
        }

        if (*rd) {
            const auto sys = doc.reduction_system();
            const auto red = reduce_to_normal_form(rd_in.resolve(doc), sys, {}, budget_from_env(kDefaultStepBudget));
            std::cout << "trace: " << red.trace.size() << (red.trace.size() == 1 ? " step" : " steps") << "\n";
            for (std::size_t i = 0; i < red.trace.size(); ++i)
                std::cout << "  " << i + 1 << ". " << describe_step(red.trace[i]) << "\n";
            std::cout << "normal form:\n" << serialize_graph("normal_form", red.normal_form);
            return 0;
        }

        if (*iv) {
            auto out = doc;
            for (auto& r : out.rules) r = invert(r);
            // A grammar turns into a reduction system accepting its start
            // graph, and a system with one accepting graph into a grammar.
            if (doc.start) {
                out.accept = {*doc.start};
                out.start.reset();
            } else if (doc.accept.size() == 1) {
                out.start = doc.accept.front();
                out.accept.clear();
            } else {
                out.accept.clear();
            }
            std::cout << serialize(out);
            return 0;
        }

        if (*ed) {
            if (!dot_graph.empty()) {
                try {
                    std::cout << export_dot(doc.graph(dot_graph));
                } catch (const Error& e) {
                    throw UsageError(e.what());
                }
                return 0;
            }
            if (dot_pair == 0) throw UsageError("one of --graph or --pair is required");
            const auto sys = doc.reduction_system();
            const auto pairs = enumerate_critical_pairs(sys);
            if (dot_pair > pairs.size())
                throw UsageError("pair " + std::to_string(dot_pair) + " out of range (" +
                                 std::to_string(pairs.size()) + " pairs)");
            std::cout << export_dot(pairs[dot_pair - 1], sys);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return kParse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
