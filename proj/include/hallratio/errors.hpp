#pragma once

#include <stdexcept>
#include <string>

namespace hallratio {

// Input graph or pattern exceeds the configured exhaustive-enumeration limit.
struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration budget (pattern count, depth, degree) was exceeded.
struct BudgetError : std::runtime_error {
    long long generated_so_far;
    explicit BudgetError(const std::string& what, long long count = 0)
        : std::runtime_error(what), generated_so_far(count) {}
};

// Malformed external input (graph6 text, rational strings, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition of an operation does not hold for the input.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A self-check failed (hypothesis violation, broken certificate, ...).
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hallratio
