#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ogs {

// Group or graph exceeds an explicit size cap; callers fall back to the
// arithmetic path or report the check as failed.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t offset, std::string expected)
        : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                             ": expected " + expected),
          offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

struct DomainError : std::runtime_error {
    explicit DomainError(std::string msg, std::size_t offset = 0)
        : std::runtime_error(std::move(msg)), offset(offset) {}
    std::size_t offset;
};

struct NotSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOddPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadK : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownClaim : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ogs
