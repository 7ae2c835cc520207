#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

// Base class for all library failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line or API usage (wrong arity, unknown flag name, ...).
struct UsageError : Error {
    using Error::Error;
};

// A construction would exceed a configured size cap.
struct CapacityError : Error {
    using Error::Error;
};

// Syntax error in the ring-expression language.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;

    ParseError(std::size_t off, std::string exp, const std::string& msg)
        : Error(msg), offset(off), expected(std::move(exp)) {}
};

}  // namespace ringlab
