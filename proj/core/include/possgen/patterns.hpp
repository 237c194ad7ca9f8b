#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "possgen/decision.hpp"
#include "possgen/sentence.hpp"

namespace possgen {

enum class AntecedentSelector { Subject, HeadModificant };

std::string to_string(AntecedentSelector s);
AntecedentSelector antecedent_selector_from_string(std::string_view s);

// A transfer pattern with an obligatory possessive slot. Verbal idioms match
// the sentence verb plus a direct-object head (N1 racks N1's brains); NP
// idioms match a head lemma and name the modificant NP that supplies the
// antecedent (a woman in her twenties).
struct ExpressionPattern {
    std::string id;
    std::optional<std::string> verb_lemma;       // verbal idiom key
    std::optional<std::string> object_lemma;     // verbal idiom key
    std::optional<std::string> head_lemma;       // NP idiom key
    std::optional<std::string> modificant_lemma; // NP idiom key
    std::string template_text;                   // contains exactly one {POSS}
    AntecedentSelector antecedent = AntecedentSelector::Subject;

    bool verbal() const { return verb_lemma.has_value(); }
};

// Parses the JSON pattern file; validates the single {POSS} slot and the
// match keys. Throws ParseError.
std::vector<ExpressionPattern> load_patterns(const std::string& source_text);

// Group I: a genitive marker on the NP translates directly. PRONOUN markers
// map their features through Fig-style antecedent rules; REFLEXIVE markers
// resolve to the clause subject with "own". Absent when the NP has no marker.
// Bypasses trigger flags, determiner slots and verb attributes.
std::optional<Decision> explicit_genitive_decision(const Sentence& sentence, const NounPhrase& np);

struct PatternMatch {
    std::string np_id;
    std::string pattern_id;
    std::string template_text;
    Decision decision; // source == Pattern
};

// Group II: first-match-in-file-order, at most one match per NP. Patterns
// whose antecedent cannot be resolved (no subject, missing modificant) are
// skipped with a diagnostic.
std::vector<PatternMatch> match_expression(const Sentence& sentence,
                                           std::span<const ExpressionPattern> patterns,
                                           std::vector<std::string>* diagnostics = nullptr);

} // namespace possgen
