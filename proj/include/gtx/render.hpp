#pragma once

#include "gtx/critical_pairs.hpp"
#include "gtx/recognizer.hpp"

namespace gtx {

/// DOT digraph; node labels read "ID: LABEL", edge labels "eID: LABEL".
std::string export_dot(const Graph& g);

/// Three clusters side by side: H1, the overlap G, H2. Persistent nodes are
/// filled in all three.
std::string export_dot(const CriticalPair& p, const GtSystem& sys);

/// Fills in whichever verdict the analysis mode did not compute.
void complete_verdicts(AnalysisReport& rep, const GtSystem& sys, const SearchOptions& opts);

/// Columns: pair, rules, joinable, strongly joinable, strongly
/// subcommutative, non-garbage. Verdicts not computed show "-", undecided
/// ones "?". Output depends only on the report, never on timing.
std::string pair_table(const AnalysisReport& rep, const GtSystem& sys);

/// Two lines: pair totals with the pairs that are not strongly joinable,
/// then the non-garbage totals.
std::string pair_summary(const AnalysisReport& rep);

/// Table, summary, assumptions, conclusion and notes.
std::string render_report(const AnalysisReport& rep, const GtSystem& sys);

/// Line-oriented key=value form of the report.
std::string render_porcelain(const AnalysisReport& rep, const GtSystem& sys);

/// "rule (nodes ..., edges ...)": the rule name and the host images of
/// its left-hand side.
std::string describe_step(const DirectDerivation& d);

std::string render_recognition(const RecognitionResult& r);

}  // namespace gtx
