#pragma once

#include <random>
#include <string>
#include <vector>

#include "possgen/lexicon.hpp"
#include "possgen/sentence.hpp"

namespace possgen::test {

// Generates structurally valid random sentences over a lexicon: dense
// positions, at most one subject, lemmas drawn from the loaded entries,
// reflexive markers only when a subject exists.
class RandomCorpus {
public:
    RandomCorpus(const Lexicon& lexicon, std::uint32_t seed) : rng_(seed) {
        for (const auto& [lemma, e] : lexicon.nouns()) noun_lemmas_.push_back(lemma);
        for (const auto& [lemma, e] : lexicon.verbs()) verb_lemmas_.push_back(lemma);
        for (const auto& [lemma, e] : lexicon.nouns()) {
            if (e.has_class(TriggerClass::Kin)) kin_lemmas_.push_back(lemma);
        }
    }

    Sentence next(int index) {
        Sentence s;
        s.id = "r" + std::to_string(index);
        s.modality = pick<Modality>({Modality::Declarative, Modality::Imperative,
                                     Modality::Interrogative});
        s.verb_lemma = pick(verb_lemmas_);
        s.negated = chance(0.2);

        int np_count = std::uniform_int_distribution<int>(0, 4)(rng_);
        bool has_subject = np_count > 0 && chance(0.8);
        bool has_object = np_count > 1 && chance(0.7);
        for (int i = 0; i < np_count; ++i) {
            NounPhrase np;
            np.id = "np" + std::to_string(i + 1);
            np.head_lemma = pick(noun_lemmas_);
            np.position = i + 1;
            if (i == 0 && has_subject) {
                np.role = GrammRole::Subject;
            } else if (i == 1 && has_object) {
                np.role = GrammRole::DirectObject;
            } else {
                np.role = GrammRole::Other;
            }
            np.person = pick<Person>({Person::First, Person::Second, Person::Third});
            np.number = chance(0.3) ? Number::Plural : Number::Singular;
            np.gender = pick<Gender>({Gender::Male, Gender::Female, Gender::Unknown});
            np.human = chance(0.5);
            np.generic_one = chance(0.05);
            np.referentiality = pick<Referentiality>(
                {Referentiality::Unspecified, Referentiality::Unspecified,
                 Referentiality::Referential, Referentiality::Generic,
                 Referentiality::Ascriptive});
            if (chance(0.25)) np.determiner.surface = chance(0.5) ? "the" : "this";
            if (chance(0.15)) {
                np.genitive.kind = GenitiveMarker::Kind::Pronoun;
                np.genitive.pronoun = random_features(false);
            } else if (has_subject && i > 0 && chance(0.1)) {
                np.genitive.kind = GenitiveMarker::Kind::Reflexive;
            }
            if (i == 0 && has_subject && chance(0.25)) {
                int elems = std::uniform_int_distribution<int>(2, 3)(rng_);
                for (int k = 0; k < elems; ++k) {
                    AntecedentFeatures f = random_features(true);
                    np.compound_elements.push_back(f);
                }
            }
            s.nps.push_back(std::move(np));
        }
        return s;
    }

private:
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
    }
    template <typename T>
    T pick(std::initializer_list<T> options) {
        std::vector<T> v(options);
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
    }
    std::string pick(const std::vector<std::string>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
    }
    AntecedentFeatures random_features(bool allow_kin_head) {
        AntecedentFeatures f;
        f.person = pick<Person>({Person::First, Person::Second, Person::Third});
        f.number = chance(0.3) ? Number::Plural : Number::Singular;
        f.gender = pick<Gender>({Gender::Male, Gender::Female, Gender::Unknown});
        f.human = chance(0.6);
        f.generic_one = chance(0.05);
        if (allow_kin_head && chance(0.4) && !kin_lemmas_.empty()) {
            f.kin_head_lemma = pick(kin_lemmas_);
        }
        return f;
    }

    std::mt19937 rng_;
    std::vector<std::string> noun_lemmas_;
    std::vector<std::string> verb_lemmas_;
    std::vector<std::string> kin_lemmas_;
};

} // namespace possgen::test
