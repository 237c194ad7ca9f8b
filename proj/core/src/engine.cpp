#include "possgen/engine.hpp"

#include <algorithm>
#include <cmath>

#include "json_util.hpp"

namespace possgen {

using detail::json;

AnnotatedSentence generate(const Sentence& sentence,
                           const Lexicon& lexicon,
                           std::span<const ExpressionPattern> patterns,
                           const RefgenConfig& config) {
    AnnotatedSentence out;
    out.sentence = sentence;

    auto record = [&](const std::string& rule, const std::string& np_id, const std::string& outcome) {
        out.trace.push_back({rule, np_id, outcome});
    };

    try {
        std::vector<std::string> pattern_diags;
        auto matches = match_expression(sentence, patterns, &pattern_diags);
        for (const auto& d : pattern_diags) {
            record("pattern_skipped", "", d);
        }
        auto match_for = [&](const std::string& np_id) -> const PatternMatch* {
            for (const auto& m : matches) {
                if (m.np_id == np_id) return &m;
            }
            return nullptr;
        };

        // NPs in surface order; the parents/children pass reads cross-NP state.
        std::vector<const NounPhrase*> ordered;
        for (const auto& np : sentence.nps) ordered.push_back(&np);
        std::sort(ordered.begin(), ordered.end(),
                  [](const NounPhrase* a, const NounPhrase* b) { return a->position < b->position; });

        for (const NounPhrase* np : ordered) {
            Decision d;
            if (np->determiner.filled()) {
                d = Decision::none(NoneReason::SlotFilled);
                record("slot_filled", np->id, "NONE");
            } else if (auto explicit_d = explicit_genitive_decision(sentence, *np)) {
                d = *explicit_d;
                record("explicit_genitive", np->id, d.form->str());
            } else if (const PatternMatch* m = match_for(np->id)) {
                d = m->decision;
                record("pattern:" + m->pattern_id, np->id, d.form->str());
            } else {
                d = decide_default_pronoun(sentence, *np, lexicon, config);
                switch (d.outcome) {
                case DecisionOutcome::Possessive:
                    record(d.antecedent == kDeicticAntecedent ? "default_deictic" : "default_subject",
                           np->id, d.form->str());
                    break;
                case DecisionOutcome::SomeAny:
                    record("some_any", np->id, *d.word);
                    break;
                case DecisionOutcome::None:
                    record("default_none", np->id, "NONE(" + to_string(*d.reason) + ")");
                    break;
                }
            }
            out.decisions.emplace(np->id, std::move(d));
        }

        apply_parents_children(sentence, out.decisions, lexicon, &out.trace);

        if (config.enable_compound_subject_rule) {
            const NounPhrase* subject = sentence.subject();
            if (subject && subject->compound()) {
                for (const NounPhrase* np : ordered) {
                    Decision& d = out.decisions.at(np->id);
                    if (!d.is_possessive() || d.source != DecisionSource::Default) continue;
                    if (d.antecedent != subject->id) continue;
                    if (auto form = compound_subject_form(*subject, *np, lexicon)) {
                        if (*form != *d.form) {
                            d.form = *form;
                            record("compound_subject_override", np->id, form->str());
                        }
                    }
                }
            }
        }
    } catch (const Error& e) {
        throw Error("sentence '" + sentence.id + "': " + e.what());
    }

    return out;
}

Metrics metrics_from_counts(long good_generated, long good_not_generated,
                            long bad_generated, long bad_not_generated) {
    Metrics m;
    m.good_generated = good_generated;
    m.good_not_generated = good_not_generated;
    m.bad_generated = bad_generated;
    m.bad_not_generated = bad_not_generated;
    long total = m.total();
    if (total == 0) {
        throw EvalError("no evaluable noun phrases");
    }
    long correct = good_generated + good_not_generated;
    m.accuracy = static_cast<double>(correct) / static_cast<double>(total);
    long committed = correct + bad_generated;
    if (committed > 0) {
        m.precision = static_cast<double>(correct) / static_cast<double>(committed);
    }
    return m;
}

Metrics evaluate(std::span<const AnnotatedSentence> outputs,
                 std::span<const GoldSentence> gold) {
    std::map<std::pair<std::string, std::string>, std::optional<std::string>> gold_by_np;
    for (const auto& g : gold) {
        for (const auto& [np_id, form] : g.gold) {
            gold_by_np[{g.sentence.id, np_id}] = form;
        }
    }

    long gg = 0, gng = 0, bg = 0, bng = 0;
    std::size_t seen = 0;
    for (const auto& annotated : outputs) {
        for (const auto& np : annotated.sentence.nps) {
            auto it = gold_by_np.find({annotated.sentence.id, np.id});
            if (it == gold_by_np.end()) {
                throw EvalError("gold/output id mismatch: no gold entry for '" +
                                annotated.sentence.id + "/" + np.id + "'");
            }
            ++seen;
            const std::optional<std::string>& want = it->second;
            const Decision& d = annotated.decisions.at(np.id);
            if (d.is_possessive()) {
                if (want && *want == d.form->str()) {
                    ++gg;
                } else {
                    ++bg;
                }
            } else {
                if (want) {
                    ++bng;
                } else {
                    ++gng;
                }
            }
        }
    }
    if (seen != gold_by_np.size()) {
        throw EvalError("gold/output id mismatch: gold covers noun phrases absent from the output");
    }
    return metrics_from_counts(gg, gng, bg, bng);
}

namespace {

json decision_to_json(const Decision& d) {
    json obj = json::object();
    obj["outcome"] = to_string(d.outcome);
    if (d.outcome == DecisionOutcome::SomeAny) {
        obj["form"] = *d.word;
    } else if (d.form) {
        obj["form"] = to_string(d.form->base);
    } else {
        obj["form"] = nullptr;
    }
    obj["own"] = d.form ? d.form->own_suffix : false;
    obj["antecedent"] = d.antecedent ? json(*d.antecedent) : json(nullptr);
    obj["source"] = d.source ? json(to_string(*d.source)) : json(nullptr);
    obj["reliability"] = to_string(d.reliability);
    obj["reason"] = d.reason ? json(to_string(*d.reason)) : json(nullptr);
    return obj;
}

Decision decision_from_json(const json& obj, const std::string& where) {
    detail::require_object(obj, where);
    detail::reject_unknown_keys(
        obj, {"outcome", "form", "own", "antecedent", "source", "reliability", "reason"}, where);
    Decision d;
    d.outcome = decision_outcome_from_string(detail::require_string(obj, "outcome", where));
    if (d.outcome == DecisionOutcome::Possessive) {
        PossessiveForm f;
        f.base = pronoun_base_from_string(detail::require_string(obj, "form", where));
        f.own_suffix = detail::bool_or(obj, "own", false, where);
        d.form = f;
        d.source = decision_source_from_string(detail::require_string(obj, "source", where));
    } else if (d.outcome == DecisionOutcome::SomeAny) {
        d.word = detail::require_string(obj, "form", where);
    }
    if (auto it = obj.find("antecedent"); it != obj.end() && !it->is_null()) {
        d.antecedent = it->get<std::string>();
    }
    if (auto it = obj.find("reliability"); it != obj.end()) {
        d.reliability = reliability_from_string(it->get<std::string>());
    }
    if (auto it = obj.find("reason"); it != obj.end() && !it->is_null()) {
        d.reason = none_reason_from_string(it->get<std::string>());
    }
    return d;
}

} // namespace

std::string serialize_annotated(const AnnotatedSentence& annotated, bool with_trace) {
    json rec = detail::parse_json(serialize_record(annotated.sentence), "record");
    for (auto& nprec : rec["nps"]) {
        const std::string np_id = nprec["id"].get<std::string>();
        nprec["decision"] = decision_to_json(annotated.decisions.at(np_id));
    }
    if (with_trace) {
        json trace = json::array();
        for (const auto& t : annotated.trace) {
            trace.push_back({{"rule", t.rule}, {"np", t.np_id}, {"outcome", t.outcome}});
        }
        rec["trace"] = std::move(trace);
    }
    return rec.dump();
}

AnnotatedSentence parse_annotated(const std::string& line) {
    AnnotatedSentence out;
    out.sentence = parse_record(line);
    json rec = detail::parse_json(line, "annotated record");
    const json& nps = rec["nps"];
    for (std::size_t i = 0; i < nps.size(); ++i) {
        const std::string& np_id = out.sentence.nps[i].id;
        auto it = nps[i].find("decision");
        if (it == nps[i].end()) {
            throw ParseError("annotated record '" + out.sentence.id + "': NP '" + np_id +
                             "' has no decision");
        }
        out.decisions.emplace(np_id,
                              decision_from_json(*it, "record '" + out.sentence.id + "' decision"));
    }
    return out;
}

std::string serialize_metrics(const Metrics& metrics) {
    json obj = {{"good_generated", metrics.good_generated},
                {"good_not_generated", metrics.good_not_generated},
                {"bad_generated", metrics.bad_generated},
                {"bad_not_generated", metrics.bad_not_generated},
                {"accuracy", metrics.accuracy},
                {"precision", metrics.precision ? json(*metrics.precision) : json(nullptr)}};
    return obj.dump(2);
}

} // namespace possgen
