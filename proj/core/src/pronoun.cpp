#include "possgen/pronoun.hpp"

namespace possgen {

namespace {

const std::pair<PronounBase, const char*> kBaseNames[] = {
    {PronounBase::My, "my"},       {PronounBase::Our, "our"},
    {PronounBase::Your, "your"},   {PronounBase::His, "his"},
    {PronounBase::Her, "her"},     {PronounBase::Its, "its"},
    {PronounBase::Their, "their"}, {PronounBase::Ones, "one's"},
};

} // namespace

std::string to_string(PronounBase b) {
    for (const auto& [value, name] : kBaseNames) {
        if (value == b) return name;
    }
    return "?";
}

PronounBase pronoun_base_from_string(std::string_view s) {
    for (const auto& [value, name] : kBaseNames) {
        if (s == name) return value;
    }
    throw ParseError("unknown possessive form '" + std::string(s) + "'");
}

std::string PossessiveForm::str() const {
    std::string s = to_string(base);
    if (own_suffix) s += " own";
    return s;
}

PossessiveForm pronoun_for_antecedent(const AntecedentFeatures& f) {
    if (f.person == Person::First) {
        return {f.number == Number::Singular ? PronounBase::My : PronounBase::Our};
    }
    if (f.person == Person::Second) {
        return {PronounBase::Your};
    }
    // Unmarked person falls through here as third person.
    if (f.number == Number::Singular) {
        if (f.generic_one) return {PronounBase::Ones};
        if (f.gender == Gender::Male) return {PronounBase::His};
        if (f.gender == Gender::Female) return {PronounBase::Her};
        if (f.human) return {PronounBase::Their}; // gender unknown
        return {PronounBase::Its};
    }
    return {PronounBase::Their};
}

PossessiveForm pronoun_for_antecedent(const NounPhrase& antecedent) {
    if (!antecedent.compound()) {
        return pronoun_for_antecedent(antecedent.features());
    }
    for (const auto& e : antecedent.compound_elements) {
        if (e.person == Person::First) return {PronounBase::Our};
    }
    for (const auto& e : antecedent.compound_elements) {
        if (e.person == Person::Second) return {PronounBase::Your};
    }
    return {PronounBase::Their};
}

PossessiveForm deictic_pronoun(Modality modality) {
    if (modality == Modality::Declarative) return {PronounBase::My};
    return {PronounBase::Your};
}

PossessiveForm resolve_reflexive(const Sentence& sentence, const NounPhrase& np) {
    (void)np;
    const NounPhrase* subject = sentence.subject();
    if (!subject) {
        throw UnresolvedReflexiveError("sentence '" + sentence.id +
                                       "': reflexive genitive with no subject");
    }
    PossessiveForm form = pronoun_for_antecedent(*subject);
    form.own_suffix = true;
    return form;
}

} // namespace possgen
