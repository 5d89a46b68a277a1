#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf2g {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (grammar, DFA, polynomial, JSON series).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A precondition on an argument does not hold (alphabet mismatch, wrong arity, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A search or enumeration would exceed the configured size cap.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// Upper bound on exhaustive search spaces; read from GF2G_MAX_MONOMIALS, default 2^20.
std::size_t max_search_size();

}  // namespace gf2g
