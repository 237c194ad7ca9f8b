#include "possgen/sentence.hpp"

#include <algorithm>
#include <set>

#include "json_util.hpp"

namespace possgen {

using detail::json;

namespace {

template <typename E>
struct NamePair {
    E value;
    const char* name;
};

const NamePair<Modality> kModalityNames[] = {
    {Modality::Declarative, "DECLARATIVE"},
    {Modality::Imperative, "IMPERATIVE"},
    {Modality::Interrogative, "INTERROGATIVE"},
};
const NamePair<GrammRole> kRoleNames[] = {
    {GrammRole::Subject, "SUBJECT"},
    {GrammRole::DirectObject, "DIRECT_OBJECT"},
    {GrammRole::Other, "OTHER"},
};
const NamePair<Person> kPersonNames[] = {
    {Person::First, "FIRST"},
    {Person::Second, "SECOND"},
    {Person::Third, "THIRD"},
};
const NamePair<Number> kNumberNames[] = {
    {Number::Singular, "SINGULAR"},
    {Number::Plural, "PLURAL"},
};
const NamePair<Gender> kGenderNames[] = {
    {Gender::Male, "MALE"},
    {Gender::Female, "FEMALE"},
    {Gender::Unknown, "UNKNOWN"},
};
const NamePair<Referentiality> kReferentialityNames[] = {
    {Referentiality::Referential, "REFERENTIAL"},
    {Referentiality::Generic, "GENERIC"},
    {Referentiality::Ascriptive, "ASCRIPTIVE"},
    {Referentiality::Unspecified, "UNSPECIFIED"},
};

template <typename E, std::size_t N>
std::string name_of(const NamePair<E> (&table)[N], E value) {
    for (const auto& p : table) {
        if (p.value == value) return p.name;
    }
    return "?";
}

template <typename E, std::size_t N>
E value_of(const NamePair<E> (&table)[N], std::string_view name, const char* what) {
    for (const auto& p : table) {
        if (name == p.name) return p.value;
    }
    throw ParseError("unknown " + std::string(what) + " token '" + std::string(name) + "'");
}

} // namespace

std::string to_string(Modality m) { return name_of(kModalityNames, m); }
std::string to_string(GrammRole r) { return name_of(kRoleNames, r); }
std::string to_string(Person p) { return name_of(kPersonNames, p); }
std::string to_string(Number n) { return name_of(kNumberNames, n); }
std::string to_string(Gender g) { return name_of(kGenderNames, g); }
std::string to_string(Referentiality r) { return name_of(kReferentialityNames, r); }

const NounPhrase* Sentence::subject() const {
    for (const auto& np : nps) {
        if (np.role == GrammRole::Subject) return &np;
    }
    return nullptr;
}

const NounPhrase* Sentence::find_np(const std::string& np_id) const {
    for (const auto& np : nps) {
        if (np.id == np_id) return &np;
    }
    return nullptr;
}

namespace {

AntecedentFeatures parse_features(const json& obj, const std::string& where, bool allow_kin_head) {
    detail::require_object(obj, where);
    AntecedentFeatures f;
    f.person = value_of(kPersonNames, detail::require_string(obj, "person", where), "person");
    f.number = value_of(kNumberNames, detail::require_string(obj, "number", where), "number");
    if (auto it = obj.find("gender"); it != obj.end()) {
        f.gender = value_of(kGenderNames, it->get<std::string>(), "gender");
    }
    f.human = detail::bool_or(obj, "human", false, where);
    f.generic_one = detail::bool_or(obj, "generic_one", false, where);
    if (allow_kin_head) {
        if (auto it = obj.find("kin_head_lemma"); it != obj.end() && !it->is_null()) {
            f.kin_head_lemma = it->get<std::string>();
        }
    }
    return f;
}

json features_to_json(const AntecedentFeatures& f, bool with_kin_head) {
    json obj = {{"person", to_string(f.person)},
                {"number", to_string(f.number)},
                {"gender", to_string(f.gender)},
                {"human", f.human},
                {"generic_one", f.generic_one}};
    if (with_kin_head) {
        obj["kin_head_lemma"] = f.kin_head_lemma ? json(*f.kin_head_lemma) : json(nullptr);
    }
    return obj;
}

GenitiveMarker parse_genitive(const json& v, const std::string& where) {
    GenitiveMarker g;
    if (v.is_null()) return g;
    detail::require_object(v, where);
    std::string kind = detail::require_string(v, "kind", where);
    if (kind == "PRONOUN") {
        g.kind = GenitiveMarker::Kind::Pronoun;
        g.pronoun = parse_features(v, where, false);
    } else if (kind == "REFLEXIVE") {
        detail::reject_unknown_keys(v, {"kind"}, where);
        g.kind = GenitiveMarker::Kind::Reflexive;
    } else if (kind == "NONE") {
        detail::reject_unknown_keys(v, {"kind"}, where);
    } else {
        throw ParseError(where + ": unknown genitive kind '" + kind + "'");
    }
    return g;
}

json genitive_to_json(const GenitiveMarker& g) {
    switch (g.kind) {
    case GenitiveMarker::Kind::None:
        return json(nullptr);
    case GenitiveMarker::Kind::Reflexive:
        return json{{"kind", "REFLEXIVE"}};
    case GenitiveMarker::Kind::Pronoun: {
        json obj = {{"kind", "PRONOUN"}};
        json feats = features_to_json(g.pronoun, false);
        obj.update(feats);
        return obj;
    }
    }
    return json(nullptr);
}

// Keys permitted on an NP record. "gold_possessive" and "decision" are
// carried by gold and annotated files sharing this format.
constexpr std::initializer_list<const char*> kNpKeys = {
    "id", "head_lemma", "role", "position", "person", "number", "gender",
    "human", "generic_one", "referentiality", "determiner", "genitive",
    "compound_elements", "gold_possessive", "decision"};

NounPhrase parse_np(const json& rec, const std::string& where) {
    detail::require_object(rec, where);
    detail::reject_unknown_keys(rec, kNpKeys, where);
    NounPhrase np;
    np.id = detail::require_string(rec, "id", where);
    np.head_lemma = detail::require_string(rec, "head_lemma", where);
    np.role = value_of(kRoleNames, detail::require_string(rec, "role", where), "role");
    const json& pos = detail::require_key(rec, "position", where);
    if (!pos.is_number_integer()) throw ParseError(where + ": 'position' must be an integer");
    np.position = pos.get<int>();
    np.person = value_of(kPersonNames, detail::require_string(rec, "person", where), "person");
    np.number = value_of(kNumberNames, detail::require_string(rec, "number", where), "number");
    if (auto it = rec.find("gender"); it != rec.end()) {
        np.gender = value_of(kGenderNames, it->get<std::string>(), "gender");
    }
    np.human = detail::bool_or(rec, "human", false, where);
    np.generic_one = detail::bool_or(rec, "generic_one", false, where);
    if (auto it = rec.find("referentiality"); it != rec.end()) {
        np.referentiality = value_of(kReferentialityNames, it->get<std::string>(), "referentiality");
    }
    if (auto it = rec.find("determiner"); it != rec.end() && !it->is_null()) {
        std::string surface = it->get<std::string>();
        if (surface.empty()) throw ParseError(where + ": filled determiner surface is empty");
        np.determiner.surface = surface;
    }
    if (auto it = rec.find("genitive"); it != rec.end()) {
        np.genitive = parse_genitive(*it, where + " genitive");
    }
    if (auto it = rec.find("compound_elements"); it != rec.end()) {
        if (!it->is_array()) throw ParseError(where + ": 'compound_elements' must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            np.compound_elements.push_back(
                parse_features((*it)[i], where + " compound_elements[" + std::to_string(i) + "]", true));
        }
    }
    return np;
}

json np_to_json(const NounPhrase& np) {
    json rec = {{"id", np.id},
                {"head_lemma", np.head_lemma},
                {"role", to_string(np.role)},
                {"position", np.position},
                {"person", to_string(np.person)},
                {"number", to_string(np.number)},
                {"gender", to_string(np.gender)},
                {"human", np.human},
                {"generic_one", np.generic_one},
                {"referentiality", to_string(np.referentiality)},
                {"determiner", np.determiner.filled() ? json(*np.determiner.surface) : json(nullptr)},
                {"genitive", genitive_to_json(np.genitive)}};
    json elems = json::array();
    for (const auto& e : np.compound_elements) elems.push_back(features_to_json(e, true));
    rec["compound_elements"] = std::move(elems);
    return rec;
}

Sentence sentence_from_json(const json& rec, const std::string& where) {
    detail::require_object(rec, where);
    detail::reject_unknown_keys(rec, {"id", "modality", "verb_lemma", "negated", "nps", "trace"}, where);
    Sentence s;
    s.id = detail::require_string(rec, "id", where);
    s.modality = value_of(kModalityNames, detail::require_string(rec, "modality", where), "modality");
    s.verb_lemma = detail::require_string(rec, "verb_lemma", where);
    s.negated = detail::bool_or(rec, "negated", false, where);
    const json& nps = detail::require_key(rec, "nps", where);
    if (!nps.is_array()) throw ParseError(where + ": 'nps' must be an array");

    std::set<std::string> ids;
    std::set<int> positions;
    int subjects = 0;
    for (std::size_t i = 0; i < nps.size(); ++i) {
        NounPhrase np = parse_np(nps[i], where + " nps[" + std::to_string(i) + "]");
        if (!ids.insert(np.id).second) {
            throw ParseError(where + ": duplicate NP id '" + np.id + "'");
        }
        if (!positions.insert(np.position).second) {
            throw ParseError(where + ": duplicate NP position " + std::to_string(np.position));
        }
        if (np.role == GrammRole::Subject && ++subjects > 1) {
            throw ParseError(where + ": multiple subjects");
        }
        s.nps.push_back(std::move(np));
    }
    // Dense positions: exactly 1..n.
    int expected = 1;
    for (int p : positions) {
        if (p != expected++) {
            throw ParseError(where + ": NP positions are not dense (expected 1.." +
                             std::to_string(s.nps.size()) + ")");
        }
    }
    return s;
}

} // namespace

Sentence parse_record(const std::string& line) {
    json rec = detail::parse_json(line, "record");
    std::string where = "record";
    if (rec.is_object() && rec.contains("id") && rec["id"].is_string()) {
        where += " '" + rec["id"].get<std::string>() + "'";
    }
    return sentence_from_json(rec, where);
}

std::string serialize_record(const Sentence& sentence) {
    json rec = {{"id", sentence.id},
                {"modality", to_string(sentence.modality)},
                {"verb_lemma", sentence.verb_lemma},
                {"negated", sentence.negated}};
    json nps = json::array();
    for (const auto& np : sentence.nps) nps.push_back(np_to_json(np));
    rec["nps"] = std::move(nps);
    return rec.dump();
}

std::vector<std::string> validate_against_lexicon(const Sentence& sentence, const Lexicon& lexicon) {
    std::vector<std::string> report;
    if (!sentence.verb_lemma.empty() && !lexicon.find_verb(sentence.verb_lemma)) {
        report.push_back(sentence.id + ": unknown verb lemma '" + sentence.verb_lemma + "'");
    }
    for (const auto& np : sentence.nps) {
        if (!lexicon.find_noun(np.head_lemma)) {
            report.push_back(sentence.id + "/" + np.id + ": unknown head lemma '" + np.head_lemma + "'");
        }
        for (const auto& e : np.compound_elements) {
            if (e.kin_head_lemma && !lexicon.find_noun(*e.kin_head_lemma)) {
                report.push_back(sentence.id + "/" + np.id + ": unknown kin head lemma '" +
                                 *e.kin_head_lemma + "'");
            }
        }
    }
    return report;
}

GoldSentence parse_gold_record(const std::string& line) {
    json rec = detail::parse_json(line, "gold record");
    GoldSentence g;
    g.sentence = sentence_from_json(rec, "gold record");
    const json& nps = rec["nps"];
    for (std::size_t i = 0; i < nps.size(); ++i) {
        const json& nprec = nps[i];
        std::optional<std::string> form;
        if (auto it = nprec.find("gold_possessive"); it != nprec.end() && !it->is_null()) {
            form = it->get<std::string>();
        }
        g.gold.emplace_back(g.sentence.nps[i].id, std::move(form));
    }
    return g;
}

} // namespace possgen
