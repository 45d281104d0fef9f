#pragma once

#include <stdexcept>
#include <string>

namespace zdbkit {

/// Malformed input file or JSON document (CLI exit code 2).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented operation precondition was violated (CLI exit code 3).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A claimed property failed its exhaustive check (CLI exit code 4).
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zdbkit
