#pragma once

#include "gtx/dpo.hpp"

namespace gtx {

struct Grammar {
    std::string name;
    Signature signature;
    Signature nonterminals;
    std::vector<Rule> rules;
    Graph start;
};

/// Reduction system plus the graphs it accepts; inputs range over
/// `input_signature`.
struct RecognizerSpec {
    GtSystem system;
    std::vector<Graph> accepting;
    Signature input_signature;
};

struct RecognitionResult {
    bool accepted = false;
    Graph normal_form;
    std::vector<DirectDerivation> trace;
};

class LabelOutsideSignature : public Error {
public:
    using Error::Error;
};

bool terminally_labelled(const Graph& g, const Signature& nonterminals);

RecognizerSpec grammar_to_recognizer(const Grammar& g);

/// Deterministic reduction followed by a comparison against the accepting
/// graphs. Sound only for backtracking-free specifications.
RecognitionResult recognize(const RecognizerSpec& spec, const Graph& g, const Policy& policy = {},
                            std::size_t budget = kDefaultStepBudget);

/// Breadth-first search over all reducts; throws BudgetExhausted after
/// `budget` distinct graphs without a decision.
bool recognize_with_backtracking(const RecognizerSpec& spec, const Graph& g, std::size_t budget = 100000);

}  // namespace gtx
