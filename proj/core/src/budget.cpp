#include "maskent/budget.hpp"

#include <cstdlib>
#include <string>

#include "maskent/error.hpp"

namespace maskent {

std::uint64_t default_budget() {
  const char* raw = std::getenv(kBudgetEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed == 0) return kDefaultBudget;
  return parsed;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

void require_budget(std::optional<std::uint64_t> count, std::uint64_t budget, std::string_view what) {
  if (!count || *count > budget) {
    throw BudgetError(std::string(what) + " needs " + (count ? std::to_string(*count) : std::string("> 2^64")) +
                      " steps, over the enumeration budget of " + std::to_string(budget));
  }
}

}  // namespace maskent
