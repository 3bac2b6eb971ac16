#pragma once

#include <stdexcept>
#include <string>

namespace enumap {

// Caller passed structurally invalid arguments (mismatched variable sets,
// out-of-range indices, malformed input).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined request (log of a series without unit constant
// term, weight-function pole at an integer content, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A coefficient beyond the truncation order was requested; the caller must
// rebuild with a larger order. Never silently answered with zero.
struct truncation_error : std::out_of_range {
    explicit truncation_error(const std::string& what) : std::out_of_range(what) {}
};

// An exhaustive search exceeds the configured size caps.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enumap
