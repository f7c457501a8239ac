#include "gtx/gts.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gtx {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;

    const std::string& head() const { return tokens.front().text; }
    [[noreturn]] void fail(std::size_t tok, const std::string& msg) const {
        throw ParseError(number, tok < tokens.size() ? tokens[tok].column : 1, msg);
    }
    void arity(std::size_t n, const char* usage) const {
        if (tokens.size() != n) fail(std::min(tokens.size(), n), std::string("expected `") + usage + "`");
    }
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

bool is_number(const std::string& s) {
    return !s.empty() && s.size() < 18 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_symbol(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-';
    });
}

const std::set<std::string> kHeaders = {"system", "signature",   "graph", "rule",  "nonterminals",
                                        "start",  "accept",      "predicate"};

/// Maps id tokens to numbers within one graph or rule. Nodes and edges have
/// separate namespaces.
class IdScope {
public:
    explicit IdScope(const std::vector<const Line*>& lines) {
        for (const Line* l : lines) {
            if (l->head() == "node" && l->tokens.size() > 1 && is_number(l->tokens[1].text))
                next_node_ = std::max<Id>(next_node_, std::stoll(l->tokens[1].text) + 1);
            if (l->head() == "edge" && l->tokens.size() > 1 && is_number(l->tokens[1].text))
                next_edge_ = std::max<Id>(next_edge_, std::stoll(l->tokens[1].text) + 1);
        }
    }
    Id node(const Line& l, std::size_t tok) { return resolve(l, tok, nodes_, next_node_); }
    Id edge(const Line& l, std::size_t tok) { return resolve(l, tok, edges_, next_edge_); }

private:
    static Id resolve(const Line& l, std::size_t tok, std::map<std::string, Id>& names, Id& next) {
        const std::string& s = l.tokens[tok].text;
        if (is_number(s)) return std::stoll(s);
        if (!is_symbol(s)) l.fail(tok, "malformed id '" + s + "'");
        auto [it, fresh] = names.emplace(s, next);
        if (fresh) ++next;
        return it->second;
    }
    std::map<std::string, Id> nodes_, edges_;
    Id next_node_ = 1;
    Id next_edge_ = 1;
};

struct Where {
    std::size_t line;
    std::size_t column;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

    GtsDocument run() {
        split_blocks();
        // The signature is read first so labels can be checked wherever the
        // block appears.
        for (auto& b : blocks_)
            if (b.header->head() == "signature") read_signature(b, doc_.signature);
        for (auto& b : blocks_) read_block(b);
        resolve_names();
        return std::move(doc_);
    }

private:
    struct Block {
        const Line* header;
        std::vector<const Line*> body;
    };

    void split_blocks() {
        for (const auto& l : lines_) {
            if (kHeaders.count(l.head())) {
                blocks_.push_back({&l, {}});
            } else {
                if (blocks_.empty()) l.fail(0, "unexpected '" + l.head() + "' before any section");
                blocks_.back().body.push_back(&l);
            }
        }
    }

    void read_signature(const Block& b, std::optional<Signature>& into) {
        const Line& h = *b.header;
        if (into) h.fail(0, "duplicate `" + h.head() + "` section");
        h.arity(1, h.head().c_str());
        Signature s;
        for (const Line* l : b.body) {
            std::set<std::string>* target = nullptr;
            if (l->head() == "nodes")
                target = &s.node_labels;
            else if (l->head() == "edges")
                target = &s.edge_labels;
            else
                l->fail(0, "expected `nodes` or `edges`, got '" + l->head() + "'");
            for (std::size_t i = 1; i < l->tokens.size(); ++i) {
                if (!target->insert(l->tokens[i].text).second)
                    l->fail(i, "duplicate label '" + l->tokens[i].text + "'");
            }
        }
        into = s;
    }

    void check_label(const Line& l, std::size_t tok, bool node) {
        if (!doc_.signature) return;
        const auto& set = node ? doc_.signature->node_labels : doc_.signature->edge_labels;
        if (!set.count(l.tokens[tok].text))
            l.fail(tok, std::string("unknown ") + (node ? "node" : "edge") + " label '" + l.tokens[tok].text + "'");
    }

    /// Reads node/edge lines into a graph; `where` records each item's line.
    Graph read_graph(const std::vector<const Line*>& body, IdScope& ids, std::map<Id, Where>* node_at,
                     std::map<Id, Where>* edge_at) {
        Graph g;
        std::vector<const Line*> edges;
        for (const Line* l : body) {
            if (l->head() == "node") {
                l->arity(3, "node ID LABEL");
                Id id = ids.node(*l, 1);
                if (g.has_node(id)) l->fail(1, "duplicate node id '" + l->tokens[1].text + "'");
                check_label(*l, 2, true);
                g.add_node(id, l->tokens[2].text);
                if (node_at) (*node_at)[id] = {l->number, l->tokens[1].column};
            } else if (l->head() == "edge") {
                edges.push_back(l);
            } else {
                l->fail(0, "expected `node` or `edge`, got '" + l->head() + "'");
            }
        }
        for (const Line* l : edges) {
            l->arity(5, "edge ID SRC TGT LABEL");
            Id id = ids.edge(*l, 1);
            if (g.has_edge(id)) l->fail(1, "duplicate edge id '" + l->tokens[1].text + "'");
            Id s = ids.node(*l, 2), t = ids.node(*l, 3);
            if (!g.has_node(s)) l->fail(2, "unknown node '" + l->tokens[2].text + "'");
            if (!g.has_node(t)) l->fail(3, "unknown node '" + l->tokens[3].text + "'");
            check_label(*l, 4, false);
            g.add_edge(id, s, t, l->tokens[4].text);
            if (edge_at) (*edge_at)[id] = {l->number, l->tokens[1].column};
        }
        return g;
    }

    void read_block(const Block& b) {
        const Line& h = *b.header;
        const std::string& kind = h.head();
        if (kind == "signature") return;
        if (kind == "system") {
            h.arity(2, "system NAME");
            if (!b.body.empty()) b.body.front()->fail(0, "unexpected '" + b.body.front()->head() + "'");
            doc_.name = h.tokens[1].text;
        } else if (kind == "nonterminals") {
            read_signature(b, doc_.nonterminals);
            if (doc_.signature) {
                for (const auto& l : doc_.nonterminals->node_labels)
                    if (!doc_.signature->node_labels.count(l)) h.fail(0, "nonterminal '" + l + "' not in signature");
                for (const auto& l : doc_.nonterminals->edge_labels)
                    if (!doc_.signature->edge_labels.count(l)) h.fail(0, "nonterminal '" + l + "' not in signature");
            }
        } else if (kind == "graph") {
            h.arity(2, "graph NAME");
            const std::string& name = h.tokens[1].text;
            if (graph_at_.count(name)) h.fail(1, "duplicate graph '" + name + "'");
            IdScope ids(b.body);
            doc_.graphs.emplace_back(name, read_graph(b.body, ids, nullptr, nullptr));
            graph_at_[name] = h.number;
        } else if (kind == "rule") {
            read_rule(b);
        } else if (kind == "start") {
            h.arity(2, "start GRAPH");
            if (doc_.start) h.fail(0, "duplicate `start`");
            expect_empty(b);
            doc_.start = h.tokens[1].text;
            refs_.push_back({h.tokens[1].text, {h.number, h.tokens[1].column}});
        } else if (kind == "accept") {
            if (h.tokens.size() < 2) h.fail(1, "expected `accept GRAPH...`");
            expect_empty(b);
            for (std::size_t i = 1; i < h.tokens.size(); ++i) {
                doc_.accept.push_back(h.tokens[i].text);
                refs_.push_back({h.tokens[i].text, {h.number, h.tokens[i].column}});
            }
        } else if (kind == "predicate") {
            read_predicate(b);
        }
    }

    void expect_empty(const Block& b) {
        if (!b.body.empty()) b.body.front()->fail(0, "unexpected '" + b.body.front()->head() + "'");
    }

    void read_predicate(const Block& b) {
        const Line& h = *b.header;
        if (doc_.predicate) h.fail(0, "duplicate `predicate`");
        expect_empty(b);
        if (h.tokens.size() < 2) h.fail(1, "expected `predicate NAME`");
        PredicateSpec p;
        const std::string& what = h.tokens[1].text;
        if (what == "type-graph") {
            h.arity(3, "predicate type-graph GRAPH");
            p.kind = PredicateSpec::Kind::TypeGraph;
        } else if (what == "finite") {
            if (h.tokens.size() < 3) h.fail(2, "expected `predicate finite GRAPH...`");
            p.kind = PredicateSpec::Kind::Finite;
        } else {
            h.arity(2, "predicate NAME");
            try {
                builtin(what);
            } catch (const Error&) {
                h.fail(1, "unknown predicate '" + what + "'");
            }
            p.name = what;
        }
        for (std::size_t i = 2; i < h.tokens.size(); ++i) {
            p.graphs.push_back(h.tokens[i].text);
            refs_.push_back({h.tokens[i].text, {h.number, h.tokens[i].column}});
        }
        doc_.predicate = p;
    }

    void read_rule(const Block& b) {
        const Line& h = *b.header;
        h.arity(2, "rule NAME");
        const std::string& name = h.tokens[1].text;
        for (const auto& r : doc_.rules)
            if (r.name == name) h.fail(1, "duplicate rule '" + name + "'");
        std::map<std::string, std::vector<const Line*>> sections;
        std::map<std::string, const Line*> section_header;
        std::string current;
        for (const Line* l : b.body) {
            const std::string& w = l->head();
            if (w == "lhs" || w == "interface" || w == "rhs") {
                l->arity(1, w.c_str());
                if (section_header.count(w)) l->fail(0, "duplicate `" + w + "` section");
                section_header[w] = l;
                sections[w];
                current = w;
            } else {
                if (current.empty()) l->fail(0, "expected `lhs`, `interface` or `rhs`, got '" + w + "'");
                sections[current].push_back(l);
            }
        }
        for (const char* s : {"lhs", "interface", "rhs"})
            if (!section_header.count(s)) h.fail(0, "rule '" + name + "' has no `" + s + "` section");
        std::vector<const Line*> all;
        for (const char* s : {"lhs", "interface", "rhs"})
            for (const Line* l : sections[s]) all.push_back(l);
        IdScope ids(all);
        Rule r;
        r.name = name;
        r.lhs = read_graph(sections["lhs"], ids, nullptr, nullptr);
        std::map<Id, Where> k_nodes, k_edges;
        r.interface = read_graph(sections["interface"], ids, &k_nodes, &k_edges);
        r.rhs = read_graph(sections["rhs"], ids, nullptr, nullptr);
        auto broken = [](const Where& w, const std::string& msg) -> ParseError {
            return ParseError(w.line, w.column, "broken inclusion: " + msg);
        };
        for (const auto& n : r.interface.nodes()) {
            for (auto [side, what] : {std::pair{&r.lhs, "lhs"}, std::pair{&r.rhs, "rhs"}}) {
                if (!side->has_node(n.id))
                    throw broken(k_nodes[n.id], "interface node " + std::to_string(n.id) + " absent from " + what);
                if (side->node(n.id).label != n.label)
                    throw broken(k_nodes[n.id], "interface node " + std::to_string(n.id) + " relabelled in " + what);
            }
        }
        for (const auto& e : r.interface.edges()) {
            for (auto [side, what] : {std::pair{&r.lhs, "lhs"}, std::pair{&r.rhs, "rhs"}}) {
                if (!side->has_edge(e.id))
                    throw broken(k_edges[e.id], "interface edge " + std::to_string(e.id) + " absent from " + what);
                if (!(side->edge(e.id) == e))
                    throw broken(k_edges[e.id], "interface edge " + std::to_string(e.id) + " differs in " + what);
            }
        }
        auto defects = validate_rule(r);
        if (!defects.empty()) h.fail(1, defects.front());
        doc_.rules.push_back(std::move(r));
    }

    void resolve_names() {
        for (const auto& [name, at] : refs_)
            if (!graph_at_.count(name)) throw ParseError(at.line, at.column, "unknown graph '" + name + "'");
    }

    std::vector<Line> lines_;
    std::vector<Block> blocks_;
    GtsDocument doc_;
    std::map<std::string, std::size_t> graph_at_;
    std::vector<std::pair<std::string, Where>> refs_;
};

void write_graph_body(std::ostream& os, const Graph& g, const std::string& indent) {
    for (const auto& n : g.nodes()) os << indent << "node " << n.id << " " << label_name(n.label) << "\n";
    for (const auto& e : g.edges())
        os << indent << "edge " << e.id << " " << e.src << " " << e.tgt << " " << label_name(e.label) << "\n";
}

void write_signature(std::ostream& os, const char* header, const Signature& s) {
    os << header << "\n  nodes";
    for (const auto& l : s.node_labels) os << " " << l;
    os << "\n  edges";
    for (const auto& l : s.edge_labels) os << " " << l;
    os << "\n";
}

void add_labels(Signature& s, const Graph& g) {
    for (const auto& n : g.nodes()) s.node_labels.insert(label_name(n.label));
    for (const auto& e : g.edges()) s.edge_labels.insert(label_name(e.label));
}

}  // namespace

const Graph& GtsDocument::graph(const std::string& name) const {
    for (const auto& [n, g] : graphs)
        if (n == name) return g;
    throw Error("unknown graph '" + name + "'");
}

Signature GtsDocument::effective_signature() const {
    if (signature) return *signature;
    Signature s;
    for (const auto& [n, g] : graphs) add_labels(s, g);
    for (const auto& r : rules)
        for (const Graph* g : {&r.lhs, &r.interface, &r.rhs}) add_labels(s, *g);
    return s;
}

GtSystem GtsDocument::rule_system() const { return GtSystem{name, effective_signature(), rules}; }

GtSystem GtsDocument::reduction_system() const {
    return is_grammar() ? invert_system(rule_system()) : rule_system();
}

std::optional<Grammar> GtsDocument::grammar() const {
    if (!start) return std::nullopt;
    Grammar g;
    g.name = name;
    g.signature = effective_signature();
    if (nonterminals) g.nonterminals = *nonterminals;
    g.rules = rules;
    g.start = graph(*start);
    return g;
}

std::optional<RecognizerSpec> GtsDocument::recognizer() const {
    if (auto g = grammar()) return grammar_to_recognizer(*g);
    if (accept.empty()) return std::nullopt;
    RecognizerSpec spec;
    spec.system = rule_system();
    for (const auto& a : accept) spec.accepting.push_back(graph(a));
    spec.input_signature = spec.system.signature;
    if (nonterminals) {
        for (const auto& l : nonterminals->node_labels) spec.input_signature.node_labels.erase(l);
        for (const auto& l : nonterminals->edge_labels) spec.input_signature.edge_labels.erase(l);
    }
    return spec;
}

LanguagePredicate GtsDocument::language(const std::string& fallback) const {
    if (!predicate) return builtin(fallback);
    switch (predicate->kind) {
        case PredicateSpec::Kind::Builtin:
            return builtin(predicate->name);
        case PredicateSpec::Kind::TypeGraph:
            return type_graph_predicate("type-graph " + predicate->graphs.front(), graph(predicate->graphs.front()));
        case PredicateSpec::Kind::Finite: {
            std::vector<Graph> members;
            std::string label = "finite";
            for (const auto& n : predicate->graphs) {
                members.push_back(graph(n));
                label += " " + n;
            }
            return finite_closure_predicate(label, std::move(members));
        }
    }
    return builtin(fallback);
}

GtsDocument parse_gts(std::string_view text) { return Parser(text).run(); }

GtsDocument parse_gts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_gts(ss.str());
}

std::string serialize_graph(const std::string& name, const Graph& g) {
    std::ostringstream os;
    os << "graph " << name << "\n";
    write_graph_body(os, g, "  ");
    return os.str();
}

std::string serialize(const GtsDocument& doc) {
    std::ostringstream os;
    if (!doc.name.empty()) os << "system " << doc.name << "\n\n";
    if (doc.signature) {
        write_signature(os, "signature", *doc.signature);
        os << "\n";
    }
    if (doc.nonterminals) {
        write_signature(os, "nonterminals", *doc.nonterminals);
        os << "\n";
    }
    for (const auto& [name, g] : doc.graphs) os << serialize_graph(name, g) << "\n";
    for (const auto& r : doc.rules) {
        os << "rule " << r.name << "\n";
        os << "  lhs\n";
        write_graph_body(os, r.lhs, "    ");
        os << "  interface\n";
        write_graph_body(os, r.interface, "    ");
        os << "  rhs\n";
        write_graph_body(os, r.rhs, "    ");
        os << "\n";
    }
    if (doc.start) os << "start " << *doc.start << "\n";
    if (!doc.accept.empty()) {
        os << "accept";
        for (const auto& a : doc.accept) os << " " << a;
        os << "\n";
    }
    if (doc.predicate) {
        os << "predicate";
        switch (doc.predicate->kind) {
            case PredicateSpec::Kind::Builtin:
                os << " " << doc.predicate->name;
                break;
            case PredicateSpec::Kind::TypeGraph:
                os << " type-graph";
                break;
            case PredicateSpec::Kind::Finite:
                os << " finite";
                break;
        }
        for (const auto& g : doc.predicate->graphs) os << " " << g;
        os << "\n";
    }
    return os.str();
}

GtsDocument document_for(const CaseStudy& cs) {
    GtsDocument doc;
    doc.name = cs.name;
    if (cs.grammar) {
        doc.signature = cs.grammar->signature;
        if (!cs.grammar->nonterminals.node_labels.empty() || !cs.grammar->nonterminals.edge_labels.empty())
            doc.nonterminals = cs.grammar->nonterminals;
        doc.rules = cs.grammar->rules;
        doc.graphs.emplace_back("S", cs.grammar->start);
        doc.start = "S";
    } else {
        doc.signature = cs.system.signature;
        doc.rules = cs.system.rules;
        if (cs.recognizer) {
            for (std::size_t i = 0; i < cs.recognizer->accepting.size(); ++i) {
                std::string n = "A" + std::to_string(i + 1);
                doc.graphs.emplace_back(n, cs.recognizer->accepting[i]);
                doc.accept.push_back(n);
            }
        }
    }
    PredicateSpec p;
    if (cs.name == "eg_6") {
        doc.graphs.emplace_back("T", two_cycle_type_graph());
        p.kind = PredicateSpec::Kind::TypeGraph;
        p.graphs = {"T"};
    } else {
        p.name = cs.predicate.name;
    }
    doc.predicate = p;
    return doc;
}

}  // namespace gtx
