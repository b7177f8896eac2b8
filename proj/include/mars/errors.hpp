#pragma once

#include <stdexcept>
#include <string>

namespace mars {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Backend errors
struct AuthError : Error {
    using Error::Error;
};
struct TransportError : Error {
    using Error::Error;
};
struct TimeoutError : Error {
    using Error::Error;
};
struct ScriptExhausted : Error {
    using Error::Error;
};
struct MatchFailure : Error {
    using Error::Error;
};

// Comparing a letter answer with a number answer is a caller bug, not a
// recoverable condition.
struct VariantMismatch : Error {
    using Error::Error;
};

// Configuration / dataset / persistence errors
struct ConfigError : Error {
    using Error::Error;
};
struct MalformedRecord : Error {
    MalformedRecord(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_number(line) {}
    std::size_t line_number;
};
struct DuplicateId : Error {
    using Error::Error;
};
struct DatasetEmpty : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct SchemaVersionMismatch : Error {
    using Error::Error;
};

}  // namespace mars
