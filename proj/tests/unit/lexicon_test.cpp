#include <doctest.h>

#include "possgen/lexicon.hpp"
#include "support/fixtures.hpp"

using namespace possgen;

TEST_CASE("fixture lexicon loads and trigger entries are queryable") {
    Lexicon lex = test::fixture_lexicon();
    const NounEntry& hana = lex.noun("hana");
    CHECK(hana.english == "nose");
    CHECK(hana.trigger);
    CHECK(hana.has_class(TriggerClass::BodyPart));
    CHECK(lex.verb("motsu").has_attribute(kAttrPossession));
    CHECK(lex.find_noun("zzz") == nullptr);
}

TEST_CASE("is_a is proper transitive descendance") {
    Lexicon lex = test::fixture_lexicon();
    const auto& h = lex.hierarchy();
    CHECK(is_a(h, "NOSE", "ORGAN"));
    CHECK(is_a(h, "NOSE", "BODYPART")); // transitive
    CHECK_FALSE(is_a(h, "NOSE", "NOSE")); // irreflexive
    CHECK_FALSE(is_a(h, "ORGAN", "NOSE"));
    CHECK_FALSE(is_a(h, "CAR", "ORGAN"));
    CHECK_THROWS_AS(is_a(h, "NOSE", "NO_SUCH"), LexiconError);
}

TEST_CASE("is_a antisymmetry and transitivity over the whole fragment") {
    Lexicon lex = test::fixture_lexicon();
    const auto& h = lex.hierarchy();
    std::vector<std::string> ids;
    for (const auto& [id, cat] : h.categories()) ids.push_back(id);
    for (const auto& a : ids) {
        for (const auto& b : ids) {
            if (is_a(h, a, b)) CHECK_FALSE(is_a(h, b, a));
            for (const auto& c : ids) {
                if (is_a(h, a, b) && is_a(h, b, c)) CHECK(is_a(h, a, c));
            }
        }
    }
}

TEST_CASE("KIN_PARENT/KIN_CHILD entries always carry KIN") {
    Lexicon lex = test::fixture_lexicon();
    for (const auto& [lemma, e] : lex.nouns()) {
        if (e.has_class(TriggerClass::KinParent) || e.has_class(TriggerClass::KinChild)) {
            CHECK(e.has_class(TriggerClass::Kin));
        }
    }
}

TEST_CASE("lexicon round-trips through serialization") {
    Lexicon lex = test::fixture_lexicon();
    Lexicon again = load_lexicon(serialize_lexicon(lex));
    CHECK(again.nouns().size() == lex.nouns().size());
    CHECK(again.verbs().size() == lex.verbs().size());
    CHECK(serialize_lexicon(again) == serialize_lexicon(lex));
}

TEST_CASE("load errors") {
    SUBCASE("noun without category") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":[],"trigger":false}]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("noun without category"),
                             LexiconError);
    }
    SUBCASE("unknown category reference on a noun") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":["CAR"],"trigger":false}]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("unknown category reference"),
                             LexiconError);
    }
    SUBCASE("absent parent id") {
        std::string text = R"({"categories":[{"id":"CAR","parent":"VEHICLE"}],"nouns":[],"verbs":[]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("unknown category reference"),
                             LexiconError);
    }
    SUBCASE("hierarchy cycle") {
        std::string text = R"({"categories":[{"id":"A","parent":"B"},{"id":"B","parent":"A"}],
            "nouns":[],"verbs":[]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("cycle"), LexiconError);
    }
    SUBCASE("duplicate lemma") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":["A"],"trigger":false},
                     {"lemma":"x","english":"y","categories":["A"],"trigger":false}]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("duplicate lemma"), LexiconError);
    }
    SUBCASE("trigger entry without trigger class") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":["A"],"trigger":true}]})";
        CHECK_THROWS_AS(load_lexicon(text), LexiconError);
    }
    SUBCASE("kin features on a non-KIN entry") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":["A"],"trigger":true,
                      "trigger_classes":["WORK"],"kin_features":["SPOUSE"]}]})";
        CHECK_THROWS_AS(load_lexicon(text), LexiconError);
    }
    SUBCASE("KIN_CHILD without KIN") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":["A"],"trigger":true,
                      "trigger_classes":["KIN_CHILD"]}]})";
        CHECK_THROWS_AS(load_lexicon(text), LexiconError);
    }
    SUBCASE("unknown top-level key rejected") {
        std::string text = R"({"categories":[],"nouns":[],"verbs":[],"extras":[]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("unknown key"), ParseError);
    }
    SUBCASE("unknown noun key rejected") {
        std::string text = R"({"categories":[{"id":"A"}],"verbs":[],
            "nouns":[{"lemma":"x","english":"x","categories":["A"],"trigger":false,"plural":"xs"}]})";
        CHECK_THROWS_WITH_AS(load_lexicon(text), doctest::Contains("unknown key"), ParseError);
    }
}
