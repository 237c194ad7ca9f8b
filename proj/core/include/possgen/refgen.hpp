#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "possgen/decision.hpp"
#include "possgen/lexicon.hpp"
#include "possgen/sentence.hpp"

namespace possgen {

struct RefgenConfig {
    bool enable_some_any = false;
    bool enable_compound_subject_rule = true;
    bool enable_extension_constraints = false; // reserved, no shipped rules
};

// JSON object with the three boolean keys; absent keys take the defaults.
RefgenConfig load_config(const std::string& source_text);

struct TraceRecord {
    std::string rule;
    std::string np_id;
    std::string outcome;
};

// Referentiality resolution: annotated values pass through; otherwise the
// subject of a copula whose head category is a proper descendant of a
// non-subject head category is generic, and everything else referential.
Referentiality determine_referentiality(const Sentence& sentence,
                                        const NounPhrase& np,
                                        const Lexicon& lexicon);

// Group III default possessive for one NP:
//   Rule 1: kin/body-part trigger head, subject, referential, empty slot
//           -> deictic possessive.
//   Rule 2: trigger head, non-subject, referential, empty slot, not the
//           direct object of a possession/acquisition verb -> possessive
//           with the sentence subject as antecedent.
// Anything else is NONE with the matching reason; a verb-blocked direct
// object may yield a some/any determiner when enabled.
Decision decide_default_pronoun(const Sentence& sentence,
                                const NounPhrase& np,
                                const Lexicon& lexicon,
                                const RefgenConfig& config);

// Nouns that explicitly denote parents or children keep a default possessive
// only when the sentence contains one of each class; the first to appear
// becomes the antecedent of the second and loses its own default pronoun.
// Skips NPs whose antecedent is a compound subject containing the speaker
// (those fall under the compound-subject rule instead).
void apply_parents_children(const Sentence& sentence,
                            std::map<std::string, Decision>& decisions,
                            const Lexicon& lexicon,
                            std::vector<TraceRecord>* trace = nullptr);

// Compound-subject override: for a subject like "my wife and I" or "my
// sister and I" and a kin-class NP, picks my vs our from the kin features.
// Returns nullopt when the rule does not apply (the Fig-1 compound branch
// result stands).
std::optional<PossessiveForm> compound_subject_form(const NounPhrase& subject,
                                                    const NounPhrase& np,
                                                    const Lexicon& lexicon);

// some/any policy for verb-blocked direct objects: plural or uncountable
// heads only; "any" under interrogative or negated sentences, else "some".
std::optional<std::string> some_any(const Sentence& sentence,
                                    const NounPhrase& np,
                                    const Lexicon& lexicon);

} // namespace possgen
