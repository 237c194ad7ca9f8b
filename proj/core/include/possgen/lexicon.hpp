#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "possgen/errors.hpp"

namespace possgen {

// Lexical classes that make a noun conventionally take a possessive
// determiner in English. KIN_PARENT/KIN_CHILD mark nouns that explicitly
// denote parents or children (e.g. "child" but not "son") and always
// co-occur with KIN.
enum class TriggerClass {
    Kin,
    KinParent,
    KinChild,
    BodyPart,
    Work,
    PersonalPossession,
    Attribute,
    RelationalPerson,
};

// Relation of a kin noun to its possessor, used by the compound-subject rule.
enum class KinFeature {
    Spouse,
    Sibling,
    Ancestor,
    Descendant,
    OtherKin,
};

std::string to_string(TriggerClass c);
std::string to_string(KinFeature f);
TriggerClass trigger_class_from_string(std::string_view s);
KinFeature kin_feature_from_string(std::string_view s);

struct SemanticCategory {
    std::string id;
    std::optional<std::string> parent;
};

// An is-a forest over category ids. Acyclicity and parent resolution are
// verified when the lexicon is loaded.
class SemanticHierarchy {
public:
    void add(SemanticCategory category);
    bool contains(const std::string& id) const;
    const SemanticCategory& at(const std::string& id) const;
    const std::map<std::string, SemanticCategory>& categories() const { return categories_; }

    // Verifies parent resolution and acyclicity; throws LexiconError.
    void validate() const;

private:
    std::map<std::string, SemanticCategory> categories_;
};

// Proper (irreflexive) descendance: true iff child reaches ancestor via one
// or more parent links. Throws LexiconError on an unknown id.
bool is_a(const SemanticHierarchy& hierarchy, const std::string& child, const std::string& ancestor);

struct NounEntry {
    std::string lemma;
    std::string english;
    std::vector<std::string> categories;
    bool trigger = false;
    std::set<TriggerClass> trigger_classes;
    std::set<KinFeature> kin_features;
    bool countable = true;

    bool has_class(TriggerClass c) const { return trigger_classes.count(c) != 0; }
    bool has_kin_feature(KinFeature f) const { return kin_features.count(f) != 0; }
};

// Verb attribute tags are open-ended strings; the rules only consult the
// three below.
inline constexpr std::string_view kAttrPossession = "POSSESSION";
inline constexpr std::string_view kAttrAcquisition = "ACQUISITION";
inline constexpr std::string_view kAttrCopula = "COPULA";

struct VerbEntry {
    std::string lemma;
    std::string english;
    std::set<std::string> attributes;

    bool has_attribute(std::string_view tag) const {
        return attributes.count(std::string(tag)) != 0;
    }
};

// Immutable after load; safe for concurrent reads.
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(std::map<std::string, NounEntry> nouns,
            std::map<std::string, VerbEntry> verbs,
            SemanticHierarchy hierarchy);

    const NounEntry* find_noun(const std::string& lemma) const;
    const VerbEntry* find_verb(const std::string& lemma) const;

    // Throwing lookups for contexts where the lemma must resolve.
    const NounEntry& noun(const std::string& lemma) const;
    const VerbEntry& verb(const std::string& lemma) const;

    const SemanticHierarchy& hierarchy() const { return hierarchy_; }
    const std::map<std::string, NounEntry>& nouns() const { return nouns_; }
    const std::map<std::string, VerbEntry>& verbs() const { return verbs_; }

private:
    std::map<std::string, NounEntry> nouns_;
    std::map<std::string, VerbEntry> verbs_;
    SemanticHierarchy hierarchy_;
};

// Parses and fully validates a lexicon from its JSON file content.
// Throws ParseError on malformed JSON, LexiconError on invariant violations.
Lexicon load_lexicon(const std::string& source_text);

// Inverse of load_lexicon up to equivalence (used for round-trip checks).
std::string serialize_lexicon(const Lexicon& lexicon);

} // namespace possgen
