#pragma once

#include <cstdint>
#include <stdexcept>

namespace exring {

/// Thrown when a requested enumeration or Fock-space computation is larger
/// than its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default object limit for enumerators (plane partitions, Dyck words).
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;
/// Default Slater-basis size limit for Fock-space operations.
inline constexpr std::uint64_t kDefaultFockBudget = 100000;

/// max(fallback, $EXC_BUDGET). The environment can only raise a budget.
std::uint64_t budget_from_env(std::uint64_t fallback);

}  // namespace exring
