#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "possgen/errors.hpp"

namespace possgen::detail {

using json = nlohmann::ordered_json;

inline json parse_json(const std::string& text, const std::string& where) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError(where + ": malformed JSON");
    }
    return j;
}

inline void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected a JSON object");
    }
}

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ParseError(where + ": unknown key '" + key + "'");
        }
    }
}

inline const json& require_key(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing key '" + std::string(key) + "'");
    }
    return *it;
}

inline std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require_key(obj, key, where);
    if (!v.is_string()) {
        throw ParseError(where + ": key '" + std::string(key) + "' must be a string");
    }
    return v.get<std::string>();
}

inline bool require_bool(const json& obj, const char* key, const std::string& where) {
    const json& v = require_key(obj, key, where);
    if (!v.is_boolean()) {
        throw ParseError(where + ": key '" + std::string(key) + "' must be a boolean");
    }
    return v.get<bool>();
}

inline bool bool_or(const json& obj, const char* key, bool fallback, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) {
        throw ParseError(where + ": key '" + std::string(key) + "' must be a boolean");
    }
    return it->get<bool>();
}

} // namespace possgen::detail
