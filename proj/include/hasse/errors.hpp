#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasse {

// Thrown when an exact enumeration hits its node budget. Carries whatever
// was counted so far; callers must not treat the partial value as exact.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, std::uint64_t partial)
        : std::runtime_error(std::move(what)), partial_count(partial) {}
    std::uint64_t partial_count;
};

// Thrown by the randomized pipelines after max_attempts failed tries.
// `reasons` holds one failure tag per attempt.
class AttemptsExhausted : public std::runtime_error {
public:
    AttemptsExhausted(std::string what, std::vector<std::string> attempt_reasons)
        : std::runtime_error(std::move(what)), reasons(std::move(attempt_reasons)) {}
    std::vector<std::string> reasons;
};

}  // namespace hasse
