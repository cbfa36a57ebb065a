#pragma once

#include <stdexcept>
#include <string>

namespace dwgns {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (group specs, JSON files).
class ParseError : public Error {
public:
    using Error::Error;
};

// Vector or matrix shapes that do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A precondition of an operation is violated by otherwise well-formed data.
class ContractError : public Error {
public:
    using Error::Error;
};

// An enumeration or dense computation would exceed its size limit.
class GuardError : public Error {
public:
    using Error::Error;
};

// A linear system has no solution.
class InconsistentError : public Error {
public:
    using Error::Error;
};

}  // namespace dwgns
