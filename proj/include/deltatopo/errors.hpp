#pragma once

#include <stdexcept>
#include <string>

namespace delta {

// Violations of an operation's preconditions (bad simplex label, ring
// mismatch, non-face-closed pair, ...). CLI exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files / flags. CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace delta
