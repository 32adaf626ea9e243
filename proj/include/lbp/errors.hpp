#pragma once

#include <stdexcept>
#include <string>

namespace lbp {

// Raised when an exhaustive scan would exceed the configured bit-operation
// budget. The message names the estimated cost and suggests sampled mode
// where one exists.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000'000ULL;

}  // namespace lbp
