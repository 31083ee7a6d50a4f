#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace maskent {

/// 2^32, the default guard on q^{2n}-sized enumerations.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 32;

/// Name of the environment variable that overrides kDefaultBudget.
inline constexpr const char* kBudgetEnvVar = "MASKENT_BUDGET";

/// kDefaultBudget, unless MASKENT_BUDGET holds a positive integer.
std::uint64_t default_budget();

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// Throws BudgetError when `count` is missing (overflowed) or above `budget`.
void require_budget(std::optional<std::uint64_t> count, std::uint64_t budget, std::string_view what);

}  // namespace maskent
