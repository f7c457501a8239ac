#pragma once

#include <map>

#include "gtx/case_studies.hpp"

namespace gtx {

/// Language choice written in a document: `predicate NAME`,
/// `predicate type-graph G` or `predicate finite G1 G2 ...`.
struct PredicateSpec {
    enum class Kind { Builtin, TypeGraph, Finite };
    Kind kind = Kind::Builtin;
    std::string name;                 // builtin name
    std::vector<std::string> graphs;  // graph names for the other kinds

    bool operator==(const PredicateSpec&) const = default;
};

/// Parsed form of a `.gts` file.
///
///   system NAME
///   signature
///     nodes L1 L2 ...
///     edges L1 L2 ...
///   graph NAME
///     node ID LABEL
///     edge ID SRC TGT LABEL
///   rule NAME
///     lhs | interface | rhs      (each followed by node/edge lines)
///   nonterminals
///     nodes ... / edges ...
///   start GRAPH                  (makes the rules a grammar)
///   accept GRAPH ...             (accepting graphs of a reduction system)
///   predicate NAME | type-graph G | finite G1 G2 ...
///
/// `#` starts a comment. Ids are integers or symbols; symbols are numbered
/// after the largest integer id of their graph or rule. Ids are shared by
/// the three sections of a rule.
struct GtsDocument {
    std::string name;
    std::optional<Signature> signature;
    std::vector<std::pair<std::string, Graph>> graphs;
    std::vector<Rule> rules;
    std::optional<Signature> nonterminals;
    std::optional<std::string> start;
    std::vector<std::string> accept;
    std::optional<PredicateSpec> predicate;

    bool operator==(const GtsDocument&) const = default;

    const Graph& graph(const std::string& name) const;
    bool is_grammar() const { return start.has_value(); }

    /// Declared signature, or the labels used by graphs and rules.
    Signature effective_signature() const;
    /// The rules as written.
    GtSystem rule_system() const;
    /// The system that gets analysed: reversed rules for a grammar.
    GtSystem reduction_system() const;
    std::optional<Grammar> grammar() const;
    /// Recognizer for a grammar, or for a system with `accept` graphs.
    std::optional<RecognizerSpec> recognizer() const;
    /// The declared predicate, or `fallback` when none is declared.
    LanguagePredicate language(const std::string& fallback = "all") const;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Throws ParseError on the first problem: syntax, duplicate id, unknown
/// label, unknown node, broken inclusion, unknown graph.
GtsDocument parse_gts(std::string_view text);
GtsDocument parse_gts_file(const std::string& path);
std::string serialize(const GtsDocument& doc);

/// Single graph in the `graph` block syntax.
std::string serialize_graph(const std::string& name, const Graph& g);

/// The case study as a document: grammar rules for grammar-based cases,
/// otherwise the reduction rules with their accepting graphs.
GtsDocument document_for(const CaseStudy& cs);

}  // namespace gtx
