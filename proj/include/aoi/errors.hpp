#pragma once

#include <stdexcept>
#include <string>

namespace aoi {

// Malformed configuration values (non-positive durations, zero bitrate, ...).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The requested operating point never delivers an update, so the average
// AoI diverges. Raised instead of letting a non-finite value escape.
struct InfiniteAoiError : std::domain_error {
    explicit InfiniteAoiError(const std::string& what) : std::domain_error(what) {}
};

// Conditioning on an event of probability zero.
struct NullConditioningError : std::domain_error {
    explicit NullConditioningError(const std::string& what) : std::domain_error(what) {}
};

// Constrained optimization over an empty feasible set.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Exact enumeration refused because the state space is too large.
struct EnumerationTooLargeError : std::invalid_argument {
    EnumerationTooLargeError(const std::string& what, double states)
        : std::invalid_argument(what), state_space(states) {}
    double state_space;  // estimated number of enumerated outcomes
};

}  // namespace aoi
