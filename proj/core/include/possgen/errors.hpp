#pragma once

#include <stdexcept>
#include <string>

namespace possgen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file or record (carries a line/record locator in the message).
struct ParseError : Error {
    using Error::Error;
};

// Lexicon invariant violation or unresolved cross-reference.
struct LexiconError : Error {
    using Error::Error;
};

// A jibun-no marker whose clause has no subject; upstream supplementation failed.
struct UnresolvedReflexiveError : Error {
    using Error::Error;
};

// Gold/output mismatch or an empty evaluation set.
struct EvalError : Error {
    using Error::Error;
};

} // namespace possgen
