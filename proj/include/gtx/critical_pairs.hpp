#pragma once

#include "gtx/predicates.hpp"

namespace gtx {

/// Two injective, jointly surjective morphisms into a common graph.
struct Gluing {
    Graph overlap;
    Morphism g1;
    Morphism g2;
};

/// One gluing per identification of items of l1 with items of l2.
std::vector<Gluing> enumerate_gluings(const Graph& l1, const Graph& l2);

struct CriticalPair {
    std::size_t rule1 = 0;
    std::size_t rule2 = 0;
    Graph overlap;
    DirectDerivation left;
    DirectDerivation right;
    std::vector<Id> persistent;  // sorted overlap node ids
};

bool parallel_independent(const DirectDerivation& d1, const DirectDerivation& d2);

/// Critical pairs of the system, one per class. For distinct rules two pairs
/// are the same class when an overlap isomorphism commutes with both matches;
/// for a rule overlapping itself the class also absorbs swapping the two
/// derivations and rule automorphisms, which yield identical steps.
std::vector<CriticalPair> enumerate_critical_pairs(const GtSystem& sys);

/// Overlap isomorphism commuting with both matches.
bool pairs_isomorphic(const CriticalPair& p, const CriticalPair& q);

std::vector<Id> persistent_nodes(const CriticalPair& p);

enum class Joinability { StronglyJoinable, JoinableNotStrong, NotJoinable, Unknown };
enum class Subcommutativity { StronglySubcommutative, NotStronglySubcommutative, Unknown };

std::string to_string(Joinability j);
std::string to_string(Subcommutativity s);

/// Derivation sequences from the pair's two results to a common graph.
struct JoinWitness {
    std::vector<DirectDerivation> left_steps;
    std::vector<DirectDerivation> right_steps;
};

struct JoinVerdict {
    Joinability kind = Joinability::Unknown;
    std::optional<JoinWitness> witness;
    std::size_t explored_left = 0;
    std::size_t explored_right = 0;
};

struct SubcommutativityVerdict {
    Subcommutativity kind = Subcommutativity::Unknown;
    std::optional<JoinWitness> witness;
};

struct SearchOptions {
    std::size_t budget = 500;      // graphs per side
    bool exhaustive = false;       // termination known: explore everything
    std::size_t exhaustive_cap = 200000;
};

JoinVerdict check_strong_joinability(const CriticalPair& p, const GtSystem& sys,
                                     const SearchOptions& opts = {});
SubcommutativityVerdict check_strong_subcommutativity(const CriticalPair& p, const GtSystem& sys);

struct Partition {
    std::vector<std::size_t> garbage;
    std::vector<std::size_t> non_garbage;
};

Partition filter_non_garbage(const std::vector<CriticalPair>& pairs, const LanguagePredicate& pred);

enum class Mode { Confluence, Subcommutativity };

enum class Conclusion {
    ConfluentUpToGarbage,
    SubcommutativeUpToGarbage,
    LocallyConfluentUpToGarbage,
    NotLocallyConfluentUpToGarbage,
    Inconclusive
};

std::string to_string(Conclusion c);
std::string to_string(Mode m);

struct Assumptions {
    enum class Termination { Absent, Asserted, SizeReducing };
    enum class Closedness { Absent, Asserted, Probed };
    Termination termination = Termination::Absent;
    Closedness closedness = Closedness::Absent;
    std::size_t probe_nodes = 4;
    std::size_t probe_edges = 4;
    std::size_t budget = 500;
};

struct PairReport {
    CriticalPair pair;
    bool garbage = false;
    std::optional<JoinVerdict> joinability;            // confluence mode
    std::optional<SubcommutativityVerdict> subcommutativity;
};

struct AnalysisReport {
    std::string system;
    std::string predicate;
    Mode mode = Mode::Confluence;
    std::vector<PairReport> pairs;
    bool termination = false;
    std::string termination_basis;  // "asserted", "size-reducing", "absent", ...
    bool closedness = false;
    std::string closedness_basis;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::optional<std::size_t> witness;  // index into pairs
    std::string licence;                 // which result justified the conclusion
    std::vector<std::string> notes;

    std::size_t non_garbage_count() const;
};

AnalysisReport analyze(const GtSystem& sys, const LanguagePredicate& pred, Mode mode,
                       const Assumptions& assumptions);

struct ProbeCounterexample {
    Graph host;
    DirectDerivation left;
    DirectDerivation right;
};

/// Searches hosts up to the given size for a peak whose two results have no
/// common reduct. Throws BudgetExhausted if nothing was found but some peak
/// could not be decided within `budget` graphs per side.
std::optional<ProbeCounterexample> confluence_probe(const GtSystem& sys, std::size_t max_nodes,
                                                    std::size_t max_edges, std::size_t budget = 500);

/// Whether two graphs have a common reduct; nullopt if the budget ran out.
std::optional<bool> joinable(const Graph& a, const Graph& b, const GtSystem& sys, std::size_t budget);

}  // namespace gtx
