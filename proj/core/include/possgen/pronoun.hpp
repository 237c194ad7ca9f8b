#pragma once

#include <string>

#include "possgen/sentence.hpp"

namespace possgen {

enum class PronounBase { My, Our, Your, His, Her, Its, Their, Ones };

std::string to_string(PronounBase b);
PronounBase pronoun_base_from_string(std::string_view s);

// A possessive determiner. own_suffix renders "<form> own" and is set only
// for decisions originating from reflexive (jibun-no) markers.
struct PossessiveForm {
    PronounBase base = PronounBase::My;
    bool own_suffix = false;

    // Surface string, e.g. "her" or "her own".
    std::string str() const;
    bool operator==(const PossessiveForm&) const = default;
};

// Antecedent -> pronoun mapping for a simple noun phrase. Total: every
// feature combination yields exactly one form. Unmarked person is treated
// as third person by the caller supplying the bundle.
PossessiveForm pronoun_for_antecedent(const AntecedentFeatures& features);

// Same mapping for a whole NP; uses the compound branch (element-wise
// person precedence 1st > 2nd > 3rd) iff compound_elements is non-empty.
PossessiveForm pronoun_for_antecedent(const NounPhrase& antecedent);

// Speech-role anchored pronoun: speaker for declaratives, hearer for
// imperatives and interrogatives.
PossessiveForm deictic_pronoun(Modality modality);

// Resolves a jibun-no marker to the clause subject and maps it through
// pronoun_for_antecedent, with own_suffix set.
// Throws UnresolvedReflexiveError when the sentence has no subject.
PossessiveForm resolve_reflexive(const Sentence& sentence, const NounPhrase& np);

} // namespace possgen
