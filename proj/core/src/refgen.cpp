#include "possgen/refgen.hpp"

#include <algorithm>

#include "json_util.hpp"
#include "possgen/pronoun.hpp"

namespace possgen {

RefgenConfig load_config(const std::string& source_text) {
    detail::json root = detail::parse_json(source_text, "config");
    detail::require_object(root, "config");
    detail::reject_unknown_keys(
        root, {"enable_some_any", "enable_compound_subject_rule", "enable_extension_constraints"},
        "config");
    RefgenConfig c;
    c.enable_some_any = detail::bool_or(root, "enable_some_any", false, "config");
    c.enable_compound_subject_rule =
        detail::bool_or(root, "enable_compound_subject_rule", true, "config");
    c.enable_extension_constraints =
        detail::bool_or(root, "enable_extension_constraints", false, "config");
    return c;
}

Referentiality determine_referentiality(const Sentence& sentence,
                                        const NounPhrase& np,
                                        const Lexicon& lexicon) {
    if (np.referentiality != Referentiality::Unspecified) {
        return np.referentiality;
    }
    if (np.role == GrammRole::Subject) {
        const VerbEntry* verb = lexicon.find_verb(sentence.verb_lemma);
        if (verb && verb->has_attribute(kAttrCopula)) {
            const NounEntry& subject_noun = lexicon.noun(np.head_lemma);
            for (const auto& other : sentence.nps) {
                if (other.role == GrammRole::Subject) continue;
                const NounEntry& object_noun = lexicon.noun(other.head_lemma);
                for (const auto& cs : subject_noun.categories) {
                    for (const auto& co : object_noun.categories) {
                        if (is_a(lexicon.hierarchy(), cs, co)) {
                            return Referentiality::Generic;
                        }
                    }
                }
            }
        }
    }
    return Referentiality::Referential;
}

std::optional<std::string> some_any(const Sentence& sentence,
                                    const NounPhrase& np,
                                    const Lexicon& lexicon) {
    if (np.determiner.filled()) return std::nullopt;
    const NounEntry& head = lexicon.noun(np.head_lemma);
    if (np.number != Number::Plural && head.countable) {
        // Singular countable heads take an article upstream.
        return std::nullopt;
    }
    if (sentence.modality == Modality::Interrogative || sentence.negated) {
        return "any";
    }
    return "some";
}

Decision decide_default_pronoun(const Sentence& sentence,
                                const NounPhrase& np,
                                const Lexicon& lexicon,
                                const RefgenConfig& config) {
    if (np.determiner.filled()) {
        return Decision::none(NoneReason::SlotFilled);
    }
    Referentiality ref = determine_referentiality(sentence, np, lexicon);
    if (ref == Referentiality::Generic) {
        return Decision::none(NoneReason::Generic);
    }
    if (ref == Referentiality::Ascriptive) {
        return Decision::none(NoneReason::Ascriptive);
    }
    const NounEntry& head = lexicon.noun(np.head_lemma);
    if (!head.trigger) {
        return Decision::none(NoneReason::NotTrigger);
    }
    if (np.role == GrammRole::Subject) {
        if (head.has_class(TriggerClass::Kin) || head.has_class(TriggerClass::BodyPart)) {
            return Decision::possessive(deictic_pronoun(sentence.modality),
                                        std::string(kDeicticAntecedent), DecisionSource::Default);
        }
        return Decision::none(NoneReason::SubjectNotKinBody);
    }
    if (np.role == GrammRole::DirectObject) {
        const VerbEntry& verb = lexicon.verb(sentence.verb_lemma);
        std::optional<NoneReason> blocked;
        if (verb.has_attribute(kAttrPossession)) {
            blocked = NoneReason::PossessionVerb;
        } else if (verb.has_attribute(kAttrAcquisition)) {
            blocked = NoneReason::AcquisitionVerb;
        }
        if (blocked) {
            if (config.enable_some_any) {
                if (auto word = some_any(sentence, np, lexicon)) {
                    return Decision::some_any(*word, *blocked);
                }
            }
            return Decision::none(*blocked);
        }
    }
    const NounPhrase* subject = sentence.subject();
    if (!subject) {
        return Decision::none(NoneReason::NoSubject);
    }
    return Decision::possessive(pronoun_for_antecedent(*subject), subject->id,
                                DecisionSource::Default);
}

namespace {

// True when the decision's antecedent is a compound subject that includes
// the speaker; such NPs fall under the compound-subject rule of section 4.4
// and are exempt from parents/children suppression.
bool speaker_compound_antecedent(const Sentence& sentence, const Decision& d) {
    if (!d.antecedent || *d.antecedent == kDeicticAntecedent) return false;
    const NounPhrase* ant = sentence.find_np(*d.antecedent);
    if (!ant || ant->role != GrammRole::Subject || !ant->compound()) return false;
    return std::any_of(ant->compound_elements.begin(), ant->compound_elements.end(),
                       [](const AntecedentFeatures& e) { return e.person == Person::First; });
}

} // namespace

void apply_parents_children(const Sentence& sentence,
                            std::map<std::string, Decision>& decisions,
                            const Lexicon& lexicon,
                            std::vector<TraceRecord>* trace) {
    auto class_of = [&](const NounPhrase& np) -> std::optional<TriggerClass> {
        const NounEntry* e = lexicon.find_noun(np.head_lemma);
        if (!e) return std::nullopt;
        if (e->has_class(TriggerClass::KinParent)) return TriggerClass::KinParent;
        if (e->has_class(TriggerClass::KinChild)) return TriggerClass::KinChild;
        return std::nullopt;
    };

    // Earliest NP of each class, by surface position, regardless of decision.
    const NounPhrase* first_parent = nullptr;
    const NounPhrase* first_child = nullptr;
    for (const auto& np : sentence.nps) {
        auto cls = class_of(np);
        if (cls == TriggerClass::KinParent &&
            (!first_parent || np.position < first_parent->position)) {
            first_parent = &np;
        }
        if (cls == TriggerClass::KinChild &&
            (!first_child || np.position < first_child->position)) {
            first_child = &np;
        }
    }

    auto record = [&](const std::string& rule, const NounPhrase& np, const std::string& outcome) {
        if (trace) trace->push_back({rule, np.id, outcome});
    };

    for (const auto& np : sentence.nps) {
        auto cls = class_of(np);
        if (!cls) continue;
        auto it = decisions.find(np.id);
        if (it == decisions.end()) continue;
        Decision& d = it->second;
        if (!d.is_possessive() || d.source != DecisionSource::Default) continue;
        if (speaker_compound_antecedent(sentence, d)) continue;

        const NounPhrase* first_opposite =
            (*cls == TriggerClass::KinParent) ? first_child : first_parent;
        if (!first_opposite) {
            d = Decision::none(NoneReason::ParentsChildrenUnpaired);
            record("parents_children_unpaired", np, "NONE");
        } else if (np.position > first_opposite->position) {
            PossessiveForm form = pronoun_for_antecedent(*first_opposite);
            d = Decision::possessive(form, first_opposite->id, DecisionSource::Default);
            record("parents_children_pair", np, form.str());
        } else {
            d = Decision::none(NoneReason::ParentsChildrenAntecedent);
            record("parents_children_suppress", np, "NONE");
        }
    }
}

std::optional<PossessiveForm> compound_subject_form(const NounPhrase& subject,
                                                    const NounPhrase& np,
                                                    const Lexicon& lexicon) {
    if (!subject.compound()) return std::nullopt;

    bool has_first_person = false;
    std::optional<KinFeature> companion; // kin relation of the non-speaker element
    for (const auto& e : subject.compound_elements) {
        if (e.person == Person::First) {
            has_first_person = true;
            continue;
        }
        if (!e.kin_head_lemma) continue;
        const NounEntry* kin = lexicon.find_noun(*e.kin_head_lemma);
        if (!kin || !kin->has_class(TriggerClass::Kin)) continue;
        if (kin->has_kin_feature(KinFeature::Spouse)) {
            companion = KinFeature::Spouse;
        } else if (kin->has_kin_feature(KinFeature::Sibling) && companion != KinFeature::Spouse) {
            companion = KinFeature::Sibling;
        }
    }
    if (!has_first_person || !companion) return std::nullopt;

    const NounEntry* head = lexicon.find_noun(np.head_lemma);
    if (!head || !head->has_class(TriggerClass::Kin) || head->kin_features.empty()) {
        return std::nullopt;
    }

    if (*companion == KinFeature::Spouse) {
        // Children and grandchildren are shared with a spouse; other kin are not.
        return head->has_kin_feature(KinFeature::Descendant)
                   ? PossessiveForm{PronounBase::Our}
                   : PossessiveForm{PronounBase::My};
    }
    // Sibling companion: shared ancestors and siblings, separate descendants.
    if (head->has_kin_feature(KinFeature::Ancestor) || head->has_kin_feature(KinFeature::Sibling)) {
        return PossessiveForm{PronounBase::Our};
    }
    return PossessiveForm{PronounBase::My};
}

} // namespace possgen
