#include <doctest.h>

#include <random>

#include "possgen/engine.hpp"
#include "support/fixtures.hpp"

using namespace possgen;

namespace {

std::vector<AnnotatedSentence> annotate_corpus(const std::string& name,
                                               const RefgenConfig& config = {}) {
    Lexicon lex = test::fixture_lexicon();
    auto patterns = test::fixture_patterns();
    std::vector<AnnotatedSentence> out;
    for (const auto& s : test::fixture_corpus(name)) {
        out.push_back(generate(s, lex, patterns, config));
    }
    return out;
}

} // namespace

TEST_CASE("precedence: explicit beats default, slot beats everything") {
    auto outputs = annotate_corpus("example_sentences.jsonl");
    auto find = [&](const std::string& sid) -> const AnnotatedSentence& {
        for (const auto& a : outputs) {
            if (a.sentence.id == sid) return a;
        }
        throw std::runtime_error("missing " + sid);
    };

    const Decision& s1 = find("s1").decisions.at("np2");
    CHECK(s1.form->str() == "his");
    CHECK(s1.source == DecisionSource::Explicit);
    CHECK(s1.reliability == Reliability::Reliable);

    const Decision& s7 = find("s7").decisions.at("np2");
    CHECK(s7.form->str() == "my");
    CHECK(s7.source == DecisionSource::Default);
    CHECK(s7.reliability == Reliability::DefaultHeuristic);

    // jibun-no under a possession verb still yields a possessive
    const Decision& socks = find("s10").decisions.at("np2");
    CHECK(socks.form->str() == "your own");
    CHECK(socks.source == DecisionSource::Explicit);

    // filled slot wins over the default machinery
    CHECK(find("s6").decisions.at("np2").reason == NoneReason::SlotFilled);
}

TEST_CASE("every NP gets exactly one decision and traces are recorded") {
    for (const auto& a : annotate_corpus("example_sentences.jsonl")) {
        CHECK(a.decisions.size() == a.sentence.nps.size());
        for (const auto& np : a.sentence.nps) {
            CHECK(a.decisions.count(np.id) == 1);
        }
        CHECK_FALSE(a.trace.empty());
    }
}

TEST_CASE("errors carry the sentence id") {
    Lexicon lex = test::fixture_lexicon();
    auto patterns = test::fixture_patterns();
    Sentence s = test::fixture_sentence("example_sentences.jsonl", "s2");
    s.nps[0].role = GrammRole::Other; // reflexive without subject
    try {
        generate(s, lex, patterns, {});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("s2") != std::string::npos);
    }
}

TEST_CASE("annotated serialization round-trips") {
    for (const auto& a : annotate_corpus("example_sentences.jsonl")) {
        AnnotatedSentence again = parse_annotated(serialize_annotated(a));
        CHECK(again.sentence == a.sentence);
        CHECK(again.decisions == a.decisions);
    }
}

TEST_CASE("generation is deterministic") {
    auto first = annotate_corpus("kin_rules.jsonl");
    auto second = annotate_corpus("kin_rules.jsonl");
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(serialize_annotated(first[i], true) == serialize_annotated(second[i], true));
    }
}

TEST_CASE("evaluation against the gold corpus") {
    auto outputs = annotate_corpus("example_sentences.jsonl");
    std::vector<GoldSentence> gold;
    for (const auto& line : test::read_lines(test::data_path("corpus/example_sentences.gold.jsonl"))) {
        gold.push_back(parse_gold_record(line));
    }

    SUBCASE("perfect agreement") {
        Metrics m = evaluate(outputs, gold);
        CHECK(m.bad_generated == 0);
        CHECK(m.bad_not_generated == 0);
        CHECK(m.accuracy == doctest::Approx(1.0));
        REQUIRE(m.precision.has_value());
        CHECK(*m.precision == doctest::Approx(1.0));
    }
    SUBCASE("order-insensitivity") {
        Metrics base = evaluate(outputs, gold);
        std::reverse(outputs.begin(), outputs.end());
        std::mt19937 rng(7);
        std::shuffle(gold.begin(), gold.end(), rng);
        Metrics shuffled = evaluate(outputs, gold);
        CHECK(shuffled.good_generated == base.good_generated);
        CHECK(shuffled.good_not_generated == base.good_not_generated);
        CHECK(shuffled.accuracy == doctest::Approx(base.accuracy));
    }
    SUBCASE("gold/output id mismatch") {
        gold.pop_back();
        CHECK_THROWS_AS(evaluate(outputs, gold), EvalError);
    }
    SUBCASE("a wrong form counts as bad_generated, a missed one as bad_not_generated") {
        gold[0].gold[1].second = "her"; // s1 np2 actually gets "his"
        gold[4].gold[0].second = std::nullopt; // s5 np1 gets "my"
        Metrics m = evaluate(outputs, gold);
        CHECK(m.bad_generated == 2);
        CHECK(m.good_generated == 5);
        gold[6].gold[1].second = "my";
        gold[6].gold[0].second = "their"; // s7 np1 has no decision but gold wants one
        m = evaluate(outputs, gold);
        CHECK(m.bad_not_generated == 1);
    }
}

TEST_CASE("metrics identities") {
    SUBCASE("empty corpus is an error") {
        CHECK_THROWS_WITH_AS(metrics_from_counts(0, 0, 0, 0),
                             doctest::Contains("no evaluable noun phrases"), EvalError);
        CHECK_THROWS_AS(evaluate({}, {}), EvalError);
    }
    SUBCASE("precision is absent when nothing was ever generated or correct") {
        Metrics m = metrics_from_counts(0, 0, 0, 5);
        CHECK(m.accuracy == doctest::Approx(0.0));
        CHECK_FALSE(m.precision.has_value());
    }
    SUBCASE("randomized count tuples satisfy the definitions") {
        std::mt19937 rng(42);
        std::uniform_int_distribution<long> dist(0, 1000);
        for (int i = 0; i < 200; ++i) {
            long gg = dist(rng), gng = dist(rng), bg = dist(rng), bng = dist(rng);
            if (gg + gng + bg + bng == 0) continue;
            Metrics m = metrics_from_counts(gg, gng, bg, bng);
            double total = static_cast<double>(gg + gng + bg + bng);
            CHECK(m.accuracy == doctest::Approx((gg + gng) / total));
            if (gg + gng + bg > 0) {
                REQUIRE(m.precision.has_value());
                CHECK(*m.precision ==
                      doctest::Approx(static_cast<double>(gg + gng) / (gg + gng + bg)));
            } else {
                CHECK_FALSE(m.precision.has_value());
            }
        }
    }
}

TEST_CASE("metrics serialization") {
    Metrics m = metrics_from_counts(263, 346, 83, 60);
    std::string text = serialize_metrics(m);
    CHECK(text.find("\"good_generated\": 263") != std::string::npos);
    CHECK(text.find("\"precision\"") != std::string::npos);
}
