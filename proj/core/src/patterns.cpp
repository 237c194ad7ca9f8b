#include "possgen/patterns.hpp"

#include <set>

#include "json_util.hpp"

namespace possgen {

using detail::json;

std::string to_string(AntecedentSelector s) {
    return s == AntecedentSelector::Subject ? "SUBJECT" : "HEAD_MODIFICANT";
}

AntecedentSelector antecedent_selector_from_string(std::string_view s) {
    if (s == "SUBJECT") return AntecedentSelector::Subject;
    if (s == "HEAD_MODIFICANT") return AntecedentSelector::HeadModificant;
    throw ParseError("unknown antecedent selector '" + std::string(s) + "'");
}

std::vector<ExpressionPattern> load_patterns(const std::string& source_text) {
    json root = detail::parse_json(source_text, "patterns");
    if (!root.is_array()) {
        throw ParseError("patterns: expected a JSON array");
    }
    std::vector<ExpressionPattern> patterns;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < root.size(); ++i) {
        const std::string where = "patterns[" + std::to_string(i) + "]";
        const json& rec = root[i];
        detail::require_object(rec, where);
        detail::reject_unknown_keys(rec, {"id", "match", "template", "antecedent_selector"}, where);
        ExpressionPattern p;
        p.id = detail::require_string(rec, "id", where);
        if (!ids.insert(p.id).second) {
            throw ParseError(where + ": duplicate pattern id '" + p.id + "'");
        }
        const json& match = detail::require_key(rec, "match", where);
        detail::require_object(match, where + " match");
        if (match.contains("verb")) {
            detail::reject_unknown_keys(match, {"verb", "object"}, where + " match");
            p.verb_lemma = detail::require_string(match, "verb", where);
            p.object_lemma = detail::require_string(match, "object", where);
        } else {
            detail::reject_unknown_keys(match, {"head", "modificant"}, where + " match");
            p.head_lemma = detail::require_string(match, "head", where);
            p.modificant_lemma = detail::require_string(match, "modificant", where);
        }
        p.template_text = detail::require_string(rec, "template", where);
        std::size_t first = p.template_text.find("{POSS}");
        if (first == std::string::npos ||
            p.template_text.find("{POSS}", first + 1) != std::string::npos) {
            throw ParseError(where + ": template must contain exactly one {POSS} slot");
        }
        p.antecedent = antecedent_selector_from_string(
            detail::require_string(rec, "antecedent_selector", where));
        patterns.push_back(std::move(p));
    }
    return patterns;
}

std::optional<Decision> explicit_genitive_decision(const Sentence& sentence, const NounPhrase& np) {
    switch (np.genitive.kind) {
    case GenitiveMarker::Kind::None:
        return std::nullopt;
    case GenitiveMarker::Kind::Pronoun:
        return Decision::possessive(pronoun_for_antecedent(np.genitive.pronoun),
                                    std::nullopt, DecisionSource::Explicit);
    case GenitiveMarker::Kind::Reflexive: {
        PossessiveForm form = resolve_reflexive(sentence, np);
        return Decision::possessive(form, sentence.subject()->id, DecisionSource::Explicit);
    }
    }
    return std::nullopt;
}

std::vector<PatternMatch> match_expression(const Sentence& sentence,
                                           std::span<const ExpressionPattern> patterns,
                                           std::vector<std::string>* diagnostics) {
    std::vector<PatternMatch> matches;
    std::set<std::string> claimed;
    auto diag = [&](const std::string& msg) {
        if (diagnostics) diagnostics->push_back(sentence.id + ": " + msg);
    };

    for (const auto& p : patterns) {
        const NounPhrase* target = nullptr;
        if (p.verbal()) {
            if (sentence.verb_lemma != *p.verb_lemma) continue;
            for (const auto& np : sentence.nps) {
                if (np.role == GrammRole::DirectObject && np.head_lemma == *p.object_lemma &&
                    !claimed.count(np.id)) {
                    target = &np;
                    break;
                }
            }
        } else {
            for (const auto& np : sentence.nps) {
                if (np.head_lemma == *p.head_lemma && !claimed.count(np.id)) {
                    target = &np;
                    break;
                }
            }
        }
        if (!target) continue;

        const NounPhrase* antecedent = nullptr;
        if (p.antecedent == AntecedentSelector::Subject) {
            antecedent = sentence.subject();
            if (!antecedent) {
                diag("pattern '" + p.id + "' skipped: no subject for POSS antecedent");
                continue;
            }
        } else {
            for (const auto& np : sentence.nps) {
                if (p.modificant_lemma && np.head_lemma == *p.modificant_lemma) {
                    antecedent = &np;
                    break;
                }
            }
            if (!antecedent) {
                diag("pattern '" + p.id + "' skipped: modificant NP not found");
                continue;
            }
        }

        PatternMatch m;
        m.np_id = target->id;
        m.pattern_id = p.id;
        m.template_text = p.template_text;
        m.decision = Decision::possessive(pronoun_for_antecedent(*antecedent),
                                          antecedent->id, DecisionSource::Pattern);
        claimed.insert(target->id);
        matches.push_back(std::move(m));
    }
    return matches;
}

} // namespace possgen
