#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "possgen/errors.hpp"
#include "possgen/lexicon.hpp"

namespace possgen {

enum class Modality { Declarative, Imperative, Interrogative };
enum class GrammRole { Subject, DirectObject, Other };
enum class Person { First, Second, Third };
enum class Number { Singular, Plural };
enum class Gender { Male, Female, Unknown };
enum class Referentiality { Referential, Generic, Ascriptive, Unspecified };

std::string to_string(Modality m);
std::string to_string(GrammRole r);
std::string to_string(Person p);
std::string to_string(Number n);
std::string to_string(Gender g);
std::string to_string(Referentiality r);

// The feature bundle the pronoun mapping consults, also used for compound
// noun phrase elements. kin_head_lemma is set only on compound elements and
// names the lexicon entry supplying kin features (e.g. tsuma 'wife').
struct AntecedentFeatures {
    Person person = Person::Third;
    Number number = Number::Singular;
    Gender gender = Gender::Unknown;
    bool human = false;
    bool generic_one = false;
    std::optional<std::string> kin_head_lemma;

    bool operator==(const AntecedentFeatures&) const = default;
};

struct GenitiveMarker {
    enum class Kind { None, Pronoun, Reflexive };
    Kind kind = Kind::None;
    AntecedentFeatures pronoun; // meaningful only when kind == Pronoun

    bool operator==(const GenitiveMarker&) const = default;
};

struct DeterminerSlot {
    std::optional<std::string> surface; // nullopt = EMPTY; value must be non-empty

    bool filled() const { return surface.has_value(); }
    bool operator==(const DeterminerSlot&) const = default;
};

struct NounPhrase {
    std::string id;
    std::string head_lemma;
    GrammRole role = GrammRole::Other;
    int position = 0;
    Person person = Person::Third;
    Number number = Number::Singular;
    Gender gender = Gender::Unknown;
    bool human = false;
    bool generic_one = false;
    Referentiality referentiality = Referentiality::Unspecified;
    DeterminerSlot determiner;
    GenitiveMarker genitive;
    std::vector<AntecedentFeatures> compound_elements;

    bool compound() const { return !compound_elements.empty(); }
    AntecedentFeatures features() const {
        return {person, number, gender, human, generic_one, std::nullopt};
    }
    bool operator==(const NounPhrase&) const = default;
};

struct Sentence {
    std::string id;
    Modality modality = Modality::Declarative;
    std::string verb_lemma;
    bool negated = false;
    std::vector<NounPhrase> nps;

    const NounPhrase* subject() const;
    const NounPhrase* find_np(const std::string& np_id) const;
    bool operator==(const Sentence&) const = default;
};

// One JSON corpus record -> Sentence, with all type invariants checked
// (unique/dense positions, at most one subject, unique NP ids).
// Throws ParseError with a record locator.
Sentence parse_record(const std::string& line);

// Serializes to one JSON line; parse_record(serialize_record(s)) == s.
std::string serialize_record(const Sentence& sentence);

// Report-style check: every head_lemma/verb_lemma absent from the lexicon,
// one message per miss. Empty report iff fully resolvable.
std::vector<std::string> validate_against_lexicon(const Sentence& sentence, const Lexicon& lexicon);

// A gold corpus record: the sentence plus the human translation's possessive
// per NP ("her own" style surface string, or nullopt when none).
struct GoldSentence {
    Sentence sentence;
    std::vector<std::pair<std::string, std::optional<std::string>>> gold; // np id -> form
};

GoldSentence parse_gold_record(const std::string& line);

} // namespace possgen
