#include "possgen/decision.hpp"

#include <utility>

#include "possgen/errors.hpp"

namespace possgen {

namespace {

const std::pair<NoneReason, const char*> kReasonNames[] = {
    {NoneReason::SlotFilled, "slot_filled"},
    {NoneReason::Generic, "generic"},
    {NoneReason::Ascriptive, "ascriptive"},
    {NoneReason::PossessionVerb, "possession_verb"},
    {NoneReason::AcquisitionVerb, "acquisition_verb"},
    {NoneReason::NotTrigger, "not_trigger"},
    {NoneReason::SubjectNotKinBody, "subject_not_kin_body"},
    {NoneReason::ParentsChildrenUnpaired, "parents_children_unpaired"},
    {NoneReason::ParentsChildrenAntecedent, "parents_children_antecedent"},
    {NoneReason::NoSubject, "no_subject"},
};

} // namespace

std::string to_string(DecisionOutcome o) {
    switch (o) {
    case DecisionOutcome::None: return "NONE";
    case DecisionOutcome::Possessive: return "POSSESSIVE";
    case DecisionOutcome::SomeAny: return "SOME_ANY";
    }
    return "?";
}

std::string to_string(DecisionSource s) {
    switch (s) {
    case DecisionSource::Explicit: return "EXPLICIT";
    case DecisionSource::Pattern: return "PATTERN";
    case DecisionSource::Default: return "DEFAULT";
    }
    return "?";
}

std::string to_string(Reliability r) {
    return r == Reliability::Reliable ? "RELIABLE" : "DEFAULT_HEURISTIC";
}

std::string to_string(NoneReason r) {
    for (const auto& [value, name] : kReasonNames) {
        if (value == r) return name;
    }
    return "?";
}

DecisionOutcome decision_outcome_from_string(std::string_view s) {
    if (s == "NONE") return DecisionOutcome::None;
    if (s == "POSSESSIVE") return DecisionOutcome::Possessive;
    if (s == "SOME_ANY") return DecisionOutcome::SomeAny;
    throw ParseError("unknown decision outcome '" + std::string(s) + "'");
}

DecisionSource decision_source_from_string(std::string_view s) {
    if (s == "EXPLICIT") return DecisionSource::Explicit;
    if (s == "PATTERN") return DecisionSource::Pattern;
    if (s == "DEFAULT") return DecisionSource::Default;
    throw ParseError("unknown decision source '" + std::string(s) + "'");
}

Reliability reliability_from_string(std::string_view s) {
    if (s == "RELIABLE") return Reliability::Reliable;
    if (s == "DEFAULT_HEURISTIC") return Reliability::DefaultHeuristic;
    throw ParseError("unknown reliability '" + std::string(s) + "'");
}

NoneReason none_reason_from_string(std::string_view s) {
    for (const auto& [value, name] : kReasonNames) {
        if (s == name) return value;
    }
    throw ParseError("unknown reason '" + std::string(s) + "'");
}

Decision Decision::none(NoneReason reason) {
    Decision d;
    d.outcome = DecisionOutcome::None;
    d.reason = reason;
    return d;
}

Decision Decision::possessive(PossessiveForm form,
                              std::optional<std::string> antecedent,
                              DecisionSource source) {
    Decision d;
    d.outcome = DecisionOutcome::Possessive;
    d.form = form;
    d.antecedent = std::move(antecedent);
    d.source = source;
    d.reliability = source == DecisionSource::Default ? Reliability::DefaultHeuristic
                                                      : Reliability::Reliable;
    return d;
}

Decision Decision::some_any(std::string word, NoneReason blocking_reason) {
    Decision d;
    d.outcome = DecisionOutcome::SomeAny;
    d.word = std::move(word);
    d.reason = blocking_reason;
    return d;
}

} // namespace possgen
