#pragma once

#include <functional>
#include <memory>

#include "gtx/graph.hpp"

namespace gtx {

/// Span of inclusions L ⊇ K ⊆ R; K's ids are literally shared with L and R.
struct Rule {
    std::string name;
    Graph lhs;
    Graph interface;
    Graph rhs;

    bool operator==(const Rule&) const = default;
};

/// Defects of the inclusion invariant; empty when well formed.
std::vector<std::string> validate_rule(const Rule& r);
Rule invert(const Rule& r);

struct GtSystem {
    std::string name;
    Signature signature;
    std::vector<Rule> rules;

    bool operator==(const GtSystem&) const = default;
};

std::vector<std::string> validate_system(const GtSystem& sys);
GtSystem invert_system(const GtSystem& sys);

class DanglingViolation : public Error {
public:
    using Error::Error;
};

class BudgetExhausted : public Error {
public:
    using Error::Error;
};

struct Match {
    std::shared_ptr<const Rule> rule;
    std::size_t rule_index = 0;
    Morphism embedding;  // L -> host, injective
};

/// One rule application. Items of R - K get ids never used in the host and
/// context items keep their host ids, so `track` is a partial identity.
struct DirectDerivation {
    Match match;
    Graph host;
    Graph context;
    Graph result;
    Morphism comatch;  // R -> result
    Morphism track;    // partial, host -> result

    const Rule& rule() const { return *match.rule; }
    /// Inclusions D -> G and D -> H (identities on ids).
    Morphism inclusion_in() const { return identity_morphism(context); }
    Morphism inclusion_out() const { return identity_morphism(context); }
};

bool check_dangling(const Rule& r, const Morphism& g, const Graph& host);
bool check_dangling(const Match& m, const Graph& host);

/// Throws DanglingViolation when no derivation exists.
DirectDerivation apply(const Match& m, const Graph& host);
DirectDerivation apply(const Rule& r, const Morphism& g, const Graph& host);

/// Applies the inverted rule at the comatch; the result is isomorphic to the host.
DirectDerivation derivation_roundtrip(const DirectDerivation& d);

/// Every direct derivation from g, rules in declared order, matches in
/// canonical order.
std::vector<DirectDerivation> all_derivations(const Graph& g, const GtSystem& sys);

struct Successor {
    DirectDerivation derivation;
    CanonicalKey key;
};

/// One derivation per isomorphism class of result.
std::vector<Successor> successors(const Graph& g, const GtSystem& sys);

/// Picks one of `n` applicable steps; an empty policy means "first".
using Policy = std::function<std::size_t(std::size_t n)>;

struct Reduction {
    Graph normal_form;
    std::vector<DirectDerivation> trace;
};

constexpr std::size_t kDefaultStepBudget = 10000;

/// Throws BudgetExhausted once `budget` steps have been taken without
/// reaching a normal form.
Reduction reduce_to_normal_form(const Graph& g, const GtSystem& sys, const Policy& policy = {},
                                std::size_t budget = kDefaultStepBudget);

/// Budget from the GTX_BUDGET environment variable, or `fallback`.
std::size_t budget_from_env(std::size_t fallback);

}  // namespace gtx
