#pragma once

#include <stdexcept>
#include <string>

namespace c2b {

// Invalid mathematical input (bad alpha/beta, zero denominator, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (knot names, slopes, table files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace c2b
