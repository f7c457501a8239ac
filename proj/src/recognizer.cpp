#include "gtx/recognizer.hpp"

#include <deque>
#include <unordered_set>

namespace gtx {

namespace {

void check_input(const RecognizerSpec& spec, const Graph& g) {
    for (const auto& n : g.nodes())
        if (!spec.input_signature.has_node_label(n.label))
            throw LabelOutsideSignature("node label '" + label_name(n.label) + "' is not an input label");
    for (const auto& e : g.edges())
        if (!spec.input_signature.has_edge_label(e.label))
            throw LabelOutsideSignature("edge label '" + label_name(e.label) + "' is not an input label");
}

// Accepting graphs are compared by size first; keys are only computed for
// candidates of the right size.
class Acceptor {
public:
    explicit Acceptor(const RecognizerSpec& spec) : spec_(spec) {}

    bool accepts(const Graph& g, const CanonicalKey* key = nullptr) {
        bool sized = false;
        for (const auto& a : spec_.accepting)
            sized = sized || (a.node_count() == g.node_count() && a.edge_count() == g.edge_count());
        if (!sized) return false;
        if (!keys_) {
            keys_.emplace();
            for (const auto& a : spec_.accepting) keys_->insert(canonical_key(a));
        }
        return keys_->count(key ? *key : canonical_key(g)) > 0;
    }

private:
    const RecognizerSpec& spec_;
    std::optional<std::unordered_set<CanonicalKey>> keys_;
};

}  // namespace

bool terminally_labelled(const Graph& g, const Signature& nonterminals) {
    for (const auto& n : g.nodes())
        if (nonterminals.has_node_label(n.label)) return false;
    for (const auto& e : g.edges())
        if (nonterminals.has_edge_label(e.label)) return false;
    return true;
}

RecognizerSpec grammar_to_recognizer(const Grammar& g) {
    RecognizerSpec spec;
    spec.system.name = g.name;
    spec.system.signature = g.signature;
    for (const auto& r : g.rules) spec.system.rules.push_back(invert(r));
    spec.accepting = {g.start};
    for (const auto& l : g.signature.node_labels)
        if (!g.nonterminals.node_labels.count(l)) spec.input_signature.node_labels.insert(l);
    for (const auto& l : g.signature.edge_labels)
        if (!g.nonterminals.edge_labels.count(l)) spec.input_signature.edge_labels.insert(l);
    return spec;
}

RecognitionResult recognize(const RecognizerSpec& spec, const Graph& g, const Policy& policy,
                            std::size_t budget) {
    check_input(spec, g);
    auto red = reduce_to_normal_form(g, spec.system, policy, budget);
    RecognitionResult out;
    out.accepted = Acceptor(spec).accepts(red.normal_form);
    out.normal_form = std::move(red.normal_form);
    out.trace = std::move(red.trace);
    return out;
}

bool recognize_with_backtracking(const RecognizerSpec& spec, const Graph& g, std::size_t budget) {
    check_input(spec, g);
    Acceptor accept(spec);
    std::unordered_set<CanonicalKey> seen;
    std::deque<Graph> frontier;
    auto k = canonical_key(g);
    if (accept.accepts(g, &k)) return true;
    seen.insert(k);
    frontier.push_back(g);
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.front());
        frontier.pop_front();
        for (auto& s : successors(cur, spec.system)) {
            if (accept.accepts(s.derivation.result, &s.key)) return true;
            if (!seen.insert(s.key).second) continue;
            if (seen.size() > budget)
                throw BudgetExhausted("backtracking recognition exceeded " + std::to_string(budget) + " graphs");
            frontier.push_back(std::move(s.derivation.result));
        }
    }
    return false;
}

}  // namespace gtx
