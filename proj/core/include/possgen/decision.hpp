#pragma once

#include <optional>
#include <string>

#include "possgen/pronoun.hpp"

namespace possgen {

enum class DecisionOutcome { None, Possessive, SomeAny };
enum class DecisionSource { Explicit, Pattern, Default };
enum class Reliability { Reliable, DefaultHeuristic };

// Machine-readable reasons for a NONE outcome.
enum class NoneReason {
    SlotFilled,
    Generic,
    Ascriptive,
    PossessionVerb,
    AcquisitionVerb,
    NotTrigger,
    SubjectNotKinBody,
    ParentsChildrenUnpaired,
    ParentsChildrenAntecedent, // earlier NP of a parents/children pair
    NoSubject,
};

std::string to_string(DecisionOutcome o);
std::string to_string(DecisionSource s);
std::string to_string(Reliability r);
std::string to_string(NoneReason r);
DecisionOutcome decision_outcome_from_string(std::string_view s);
DecisionSource decision_source_from_string(std::string_view s);
Reliability reliability_from_string(std::string_view s);
NoneReason none_reason_from_string(std::string_view s);

// Antecedent marker for deictically anchored possessives.
inline constexpr std::string_view kDeicticAntecedent = "DEICTIC";

// Per-NP outcome. Reliability is DEFAULT_HEURISTIC iff source is DEFAULT;
// explicit and pattern decisions are reliable.
struct Decision {
    DecisionOutcome outcome = DecisionOutcome::None;
    std::optional<PossessiveForm> form;       // POSSESSIVE only
    std::optional<std::string> antecedent;    // NP id or kDeicticAntecedent
    std::optional<DecisionSource> source;     // POSSESSIVE only
    Reliability reliability = Reliability::Reliable;
    std::optional<NoneReason> reason;         // NONE (and SOME_ANY carries its blocking reason)
    std::optional<std::string> word;          // SOME_ANY only: "some" or "any"

    static Decision none(NoneReason reason);
    static Decision possessive(PossessiveForm form,
                               std::optional<std::string> antecedent,
                               DecisionSource source);
    static Decision some_any(std::string word, NoneReason blocking_reason);

    bool is_possessive() const { return outcome == DecisionOutcome::Possessive; }
    bool operator==(const Decision&) const = default;
};

} // namespace possgen
