#pragma once

#include <stdexcept>
#include <string>

namespace absx {

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised on malformed edge-list or graph6 text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a request exceeds the exhaustive-search envelope.
class EnvelopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
    if (!condition) throw PreconditionError(what);
}

} // namespace detail
} // namespace absx
