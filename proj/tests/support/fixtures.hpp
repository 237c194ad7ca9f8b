#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "possgen/engine.hpp"

namespace possgen::test {

inline std::string data_path(const std::string& relative) {
    return std::string(POSSGEN_DATA_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

inline Lexicon fixture_lexicon() {
    return load_lexicon(read_file(data_path("lexicon.json")));
}

inline std::vector<ExpressionPattern> fixture_patterns() {
    return load_patterns(read_file(data_path("patterns.json")));
}

inline std::vector<Sentence> fixture_corpus(const std::string& name) {
    std::vector<Sentence> out;
    for (const auto& line : read_lines(data_path("corpus/" + name))) {
        out.push_back(parse_record(line));
    }
    return out;
}

inline Sentence fixture_sentence(const std::string& corpus, const std::string& id) {
    for (auto& s : fixture_corpus(corpus)) {
        if (s.id == id) return s;
    }
    throw std::runtime_error("no sentence '" + id + "' in " + corpus);
}

} // namespace possgen::test
