#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "possgen/decision.hpp"
#include "possgen/lexicon.hpp"
#include "possgen/patterns.hpp"
#include "possgen/refgen.hpp"
#include "possgen/sentence.hpp"

namespace possgen {

struct AnnotatedSentence {
    Sentence sentence;
    std::map<std::string, Decision> decisions; // exactly one entry per NP id
    std::vector<TraceRecord> trace;
};

// Decision precedence per NP: filled determiner slot -> NONE(slot_filled);
// else explicit genitive; else transfer pattern; else the group III default
// machinery (with parents/children and compound-subject post-passes).
// Errors are rethrown with the sentence id as context.
AnnotatedSentence generate(const Sentence& sentence,
                           const Lexicon& lexicon,
                           std::span<const ExpressionPattern> patterns,
                           const RefgenConfig& config);

struct Metrics {
    long good_generated = 0;
    long good_not_generated = 0;
    long bad_generated = 0;
    long bad_not_generated = 0;
    double accuracy = 0.0;
    std::optional<double> precision; // absent when nothing was generated

    long total() const {
        return good_generated + good_not_generated + bad_generated + bad_not_generated;
    }
};

// Recomputes the two ratios from the four counts.
Metrics metrics_from_counts(long good_generated, long good_not_generated,
                            long bad_generated, long bad_not_generated);

// Strict surface comparison against the gold possessive per NP.
// Throws EvalError on a gold/output id mismatch or an empty corpus.
Metrics evaluate(std::span<const AnnotatedSentence> outputs,
                 std::span<const GoldSentence> gold);

// Annotated JSONL: the input record with a per-NP "decision" object, and
// the trace array when requested.
std::string serialize_annotated(const AnnotatedSentence& annotated, bool with_trace = false);
AnnotatedSentence parse_annotated(const std::string& line);

std::string serialize_metrics(const Metrics& metrics);

} // namespace possgen
