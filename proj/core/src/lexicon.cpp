#include "possgen/lexicon.hpp"

#include <algorithm>
#include <utility>

#include "json_util.hpp"

namespace possgen {

using detail::json;

namespace {

const std::pair<TriggerClass, const char*> kTriggerClassNames[] = {
    {TriggerClass::Kin, "KIN"},
    {TriggerClass::KinParent, "KIN_PARENT"},
    {TriggerClass::KinChild, "KIN_CHILD"},
    {TriggerClass::BodyPart, "BODY_PART"},
    {TriggerClass::Work, "WORK"},
    {TriggerClass::PersonalPossession, "PERSONAL_POSSESSION"},
    {TriggerClass::Attribute, "ATTRIBUTE"},
    {TriggerClass::RelationalPerson, "RELATIONAL_PERSON"},
};

const std::pair<KinFeature, const char*> kKinFeatureNames[] = {
    {KinFeature::Spouse, "SPOUSE"},
    {KinFeature::Sibling, "SIBLING"},
    {KinFeature::Ancestor, "ANCESTOR"},
    {KinFeature::Descendant, "DESCENDANT"},
    {KinFeature::OtherKin, "OTHER_KIN"},
};

} // namespace

std::string to_string(TriggerClass c) {
    for (const auto& [value, name] : kTriggerClassNames) {
        if (value == c) return name;
    }
    return "?";
}

std::string to_string(KinFeature f) {
    for (const auto& [value, name] : kKinFeatureNames) {
        if (value == f) return name;
    }
    return "?";
}

TriggerClass trigger_class_from_string(std::string_view s) {
    for (const auto& [value, name] : kTriggerClassNames) {
        if (s == name) return value;
    }
    throw ParseError("unknown trigger class '" + std::string(s) + "'");
}

KinFeature kin_feature_from_string(std::string_view s) {
    for (const auto& [value, name] : kKinFeatureNames) {
        if (s == name) return value;
    }
    throw ParseError("unknown kin feature '" + std::string(s) + "'");
}

void SemanticHierarchy::add(SemanticCategory category) {
    if (categories_.count(category.id)) {
        throw LexiconError("duplicate category id '" + category.id + "'");
    }
    categories_.emplace(category.id, std::move(category));
}

bool SemanticHierarchy::contains(const std::string& id) const {
    return categories_.count(id) != 0;
}

const SemanticCategory& SemanticHierarchy::at(const std::string& id) const {
    auto it = categories_.find(id);
    if (it == categories_.end()) {
        throw LexiconError("unknown category id '" + id + "'");
    }
    return it->second;
}

void SemanticHierarchy::validate() const {
    for (const auto& [id, cat] : categories_) {
        if (cat.parent && !contains(*cat.parent)) {
            throw LexiconError("unknown category reference: category '" + id +
                               "' has absent parent '" + *cat.parent + "'");
        }
    }
    // Walk parent chains; a chain longer than the table means a cycle.
    for (const auto& [id, cat] : categories_) {
        const SemanticCategory* cur = &cat;
        std::size_t steps = 0;
        while (cur->parent) {
            if (++steps > categories_.size()) {
                throw LexiconError("hierarchy cycle through category '" + id + "'");
            }
            cur = &at(*cur->parent);
        }
    }
}

bool is_a(const SemanticHierarchy& hierarchy, const std::string& child, const std::string& ancestor) {
    const SemanticCategory* cur = &hierarchy.at(child);
    hierarchy.at(ancestor); // both ids must exist
    while (cur->parent) {
        if (*cur->parent == ancestor) return true;
        cur = &hierarchy.at(*cur->parent);
    }
    return false;
}

Lexicon::Lexicon(std::map<std::string, NounEntry> nouns,
                 std::map<std::string, VerbEntry> verbs,
                 SemanticHierarchy hierarchy)
    : nouns_(std::move(nouns)), verbs_(std::move(verbs)), hierarchy_(std::move(hierarchy)) {}

const NounEntry* Lexicon::find_noun(const std::string& lemma) const {
    auto it = nouns_.find(lemma);
    return it == nouns_.end() ? nullptr : &it->second;
}

const VerbEntry* Lexicon::find_verb(const std::string& lemma) const {
    auto it = verbs_.find(lemma);
    return it == verbs_.end() ? nullptr : &it->second;
}

const NounEntry& Lexicon::noun(const std::string& lemma) const {
    const NounEntry* e = find_noun(lemma);
    if (!e) throw LexiconError("unknown noun lemma '" + lemma + "'");
    return *e;
}

const VerbEntry& Lexicon::verb(const std::string& lemma) const {
    const VerbEntry* e = find_verb(lemma);
    if (!e) throw LexiconError("unknown verb lemma '" + lemma + "'");
    return *e;
}

namespace {

NounEntry parse_noun(const json& rec, const std::string& where) {
    detail::require_object(rec, where);
    detail::reject_unknown_keys(
        rec, {"lemma", "english", "categories", "trigger", "trigger_classes", "kin_features", "countable"},
        where);
    NounEntry e;
    e.lemma = detail::require_string(rec, "lemma", where);
    e.english = detail::require_string(rec, "english", where);
    const json& cats = detail::require_key(rec, "categories", where);
    if (!cats.is_array() || cats.empty()) {
        throw LexiconError(where + ": noun without category");
    }
    for (const auto& c : cats) e.categories.push_back(c.get<std::string>());
    e.trigger = detail::require_bool(rec, "trigger", where);
    if (auto it = rec.find("trigger_classes"); it != rec.end()) {
        for (const auto& c : *it) e.trigger_classes.insert(trigger_class_from_string(c.get<std::string>()));
    }
    if (auto it = rec.find("kin_features"); it != rec.end()) {
        for (const auto& f : *it) e.kin_features.insert(kin_feature_from_string(f.get<std::string>()));
    }
    e.countable = detail::bool_or(rec, "countable", true, where);

    if (e.trigger != !e.trigger_classes.empty()) {
        throw LexiconError(where + ": trigger flag and trigger classes disagree for '" + e.lemma + "'");
    }
    if ((e.has_class(TriggerClass::KinParent) || e.has_class(TriggerClass::KinChild)) &&
        !e.has_class(TriggerClass::Kin)) {
        throw LexiconError(where + ": KIN_PARENT/KIN_CHILD without KIN on '" + e.lemma + "'");
    }
    if (!e.kin_features.empty() && !e.has_class(TriggerClass::Kin)) {
        throw LexiconError(where + ": kin features on non-KIN entry '" + e.lemma + "'");
    }
    return e;
}

VerbEntry parse_verb(const json& rec, const std::string& where) {
    detail::require_object(rec, where);
    detail::reject_unknown_keys(rec, {"lemma", "english", "attributes"}, where);
    VerbEntry e;
    e.lemma = detail::require_string(rec, "lemma", where);
    e.english = detail::require_string(rec, "english", where);
    const json& attrs = detail::require_key(rec, "attributes", where);
    if (!attrs.is_array()) {
        throw ParseError(where + ": 'attributes' must be an array");
    }
    for (const auto& a : attrs) {
        std::string tag = a.get<std::string>();
        if (tag.empty()) throw LexiconError(where + ": empty verb attribute tag");
        e.attributes.insert(tag);
    }
    return e;
}

} // namespace

Lexicon load_lexicon(const std::string& source_text) {
    json root = detail::parse_json(source_text, "lexicon");
    detail::require_object(root, "lexicon");
    detail::reject_unknown_keys(root, {"categories", "nouns", "verbs"}, "lexicon");

    SemanticHierarchy hierarchy;
    const json& cats = detail::require_key(root, "categories", "lexicon");
    for (std::size_t i = 0; i < cats.size(); ++i) {
        const std::string where = "lexicon categories[" + std::to_string(i) + "]";
        detail::require_object(cats[i], where);
        detail::reject_unknown_keys(cats[i], {"id", "parent"}, where);
        SemanticCategory c;
        c.id = detail::require_string(cats[i], "id", where);
        if (auto it = cats[i].find("parent"); it != cats[i].end() && !it->is_null()) {
            c.parent = it->get<std::string>();
        }
        hierarchy.add(std::move(c));
    }
    hierarchy.validate();

    std::map<std::string, NounEntry> nouns;
    const json& nrecs = detail::require_key(root, "nouns", "lexicon");
    for (std::size_t i = 0; i < nrecs.size(); ++i) {
        const std::string where = "lexicon nouns[" + std::to_string(i) + "]";
        NounEntry e = parse_noun(nrecs[i], where);
        for (const auto& cid : e.categories) {
            if (!hierarchy.contains(cid)) {
                throw LexiconError(where + ": unknown category reference '" + cid + "'");
            }
        }
        if (!nouns.emplace(e.lemma, e).second) {
            throw LexiconError(where + ": duplicate lemma '" + e.lemma + "'");
        }
    }

    std::map<std::string, VerbEntry> verbs;
    const json& vrecs = detail::require_key(root, "verbs", "lexicon");
    for (std::size_t i = 0; i < vrecs.size(); ++i) {
        const std::string where = "lexicon verbs[" + std::to_string(i) + "]";
        VerbEntry e = parse_verb(vrecs[i], where);
        if (!verbs.emplace(e.lemma, e).second) {
            throw LexiconError(where + ": duplicate lemma '" + e.lemma + "'");
        }
    }

    return Lexicon(std::move(nouns), std::move(verbs), std::move(hierarchy));
}

std::string serialize_lexicon(const Lexicon& lexicon) {
    json root = json::object();
    json cats = json::array();
    for (const auto& [id, cat] : lexicon.hierarchy().categories()) {
        json c = {{"id", cat.id}};
        if (cat.parent) c["parent"] = *cat.parent;
        cats.push_back(std::move(c));
    }
    root["categories"] = std::move(cats);

    json nouns = json::array();
    for (const auto& [lemma, e] : lexicon.nouns()) {
        json rec = {{"lemma", e.lemma}, {"english", e.english}, {"categories", e.categories},
                    {"trigger", e.trigger}};
        json tcs = json::array();
        for (TriggerClass c : e.trigger_classes) tcs.push_back(to_string(c));
        rec["trigger_classes"] = std::move(tcs);
        json kfs = json::array();
        for (KinFeature f : e.kin_features) kfs.push_back(to_string(f));
        rec["kin_features"] = std::move(kfs);
        rec["countable"] = e.countable;
        nouns.push_back(std::move(rec));
    }
    root["nouns"] = std::move(nouns);

    json verbs = json::array();
    for (const auto& [lemma, e] : lexicon.verbs()) {
        verbs.push_back({{"lemma", e.lemma}, {"english", e.english},
                         {"attributes", json(e.attributes)}});
    }
    root["verbs"] = std::move(verbs);
    return root.dump(2);
}

} // namespace possgen
