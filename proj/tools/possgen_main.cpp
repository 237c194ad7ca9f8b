// possgen: command-line front end for the possessive pronoun decision engine.
//
//   possgen generate --lexicon L --patterns P [--config C] [--trace] [corpus.jsonl]
//   possgen eval --gold G [annotated.jsonl]
//   possgen validate --lexicon L [corpus.jsonl]
//
// Corpus input defaults to standard input. Exit codes: 0 success,
// 1 validation/runtime error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "possgen/engine.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw possgen::Error("cannot open file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reads JSONL from a file or stdin ("" or "-"), skipping blank lines.
std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    auto drain = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                lines.push_back(line);
            }
        }
    };
    if (path.empty() || path == "-") {
        drain(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            throw possgen::Error("cannot open file '" + path + "'");
        }
        drain(in);
    }
    return lines;
}

int cmd_generate(const std::string& lexicon_path, const std::string& patterns_path,
                 const std::string& config_path, bool trace, const std::string& corpus_path) {
    possgen::Lexicon lexicon = possgen::load_lexicon(read_file(lexicon_path));
    std::vector<possgen::ExpressionPattern> patterns =
        possgen::load_patterns(read_file(patterns_path));
    possgen::RefgenConfig config;
    if (!config_path.empty()) {
        config = possgen::load_config(read_file(config_path));
    }

    int status = 0;
    for (const std::string& line : read_lines(corpus_path)) {
        possgen::Sentence sentence = possgen::parse_record(line);
        auto report = possgen::validate_against_lexicon(sentence, lexicon);
        if (!report.empty()) {
            for (const auto& msg : report) std::cerr << msg << "\n";
            status = 1;
            continue;
        }
        possgen::AnnotatedSentence annotated =
            possgen::generate(sentence, lexicon, patterns, config);
        std::cout << possgen::serialize_annotated(annotated, trace) << "\n";
    }
    return status;
}

int cmd_eval(const std::string& gold_path, const std::string& annotated_path) {
    std::vector<possgen::AnnotatedSentence> outputs;
    for (const std::string& line : read_lines(annotated_path)) {
        outputs.push_back(possgen::parse_annotated(line));
    }
    std::vector<possgen::GoldSentence> gold;
    for (const std::string& line : read_lines(gold_path)) {
        gold.push_back(possgen::parse_gold_record(line));
    }
    possgen::Metrics metrics = possgen::evaluate(outputs, gold);
    std::cout << possgen::serialize_metrics(metrics) << "\n";
    return 0;
}

int cmd_validate(const std::string& lexicon_path, const std::string& corpus_path) {
    possgen::Lexicon lexicon = possgen::load_lexicon(read_file(lexicon_path));
    int status = 0;
    for (const std::string& line : read_lines(corpus_path)) {
        possgen::Sentence sentence = possgen::parse_record(line);
        for (const auto& msg : possgen::validate_against_lexicon(sentence, lexicon)) {
            std::cerr << msg << "\n";
            status = 1;
        }
    }
    if (status == 0) {
        std::cout << "ok\n";
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"possessive pronoun generation and evaluation"};
    app.require_subcommand(1);

    std::string lexicon_path, patterns_path, config_path, corpus_path, gold_path;
    bool trace = false;

    CLI::App* generate = app.add_subcommand("generate", "annotate a corpus with decisions");
    generate->add_option("--lexicon", lexicon_path, "lexicon JSON file")->required();
    generate->add_option("--patterns", patterns_path, "expression pattern JSON file")->required();
    generate->add_option("--config", config_path, "refgen config JSON file");
    generate->add_flag("--trace", trace, "include rule-firing traces in the output");
    generate->add_option("corpus", corpus_path, "corpus JSONL (default: stdin)");

    CLI::App* eval = app.add_subcommand("eval", "score annotated output against a gold corpus");
    eval->add_option("--gold", gold_path, "gold corpus JSONL")->required();
    eval->add_option("annotated", corpus_path, "annotated JSONL (default: stdin)");

    CLI::App* validate = app.add_subcommand("validate", "cross-check a corpus against the lexicon");
    validate->add_option("--lexicon", lexicon_path, "lexicon JSON file")->required();
    validate->add_option("corpus", corpus_path, "corpus JSONL (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(lexicon_path, patterns_path, config_path, trace, corpus_path);
        }
        if (eval->parsed()) {
            return cmd_eval(gold_path, corpus_path);
        }
        return cmd_validate(lexicon_path, corpus_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
