#pragma once

#include "exring/budget.hpp"
#include "exring/dyck.hpp"
#include "exring/plane_partition.hpp"
#include "exring/rational.hpp"

#include <vector>

namespace exring {

/// C(n, k); 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// N(n, r) = C(n, r) C(n, r-1) / n, the number of Dyck words of
/// semilength n with r - 1 valleys. Returns 0 unless 1 <= r <= n.
BigInt narayana(long n, long r);

/// C(2n, n) / (n + 1).
BigInt catalan(long n);

/// |B(a, b, c)| from the box product formula, evaluated exactly.
BigInt macmahon_count(long a, long b, long c);

/// All a x b plane partitions with entries <= c, in lex order of their
/// row-major entries. Throws BudgetExceeded when the count is over `budget`.
std::vector<PlanePartition> enumerate_pp(int a, int b, int c,
                                         std::uint64_t budget = budget_from_env(kDefaultEnumerationBudget));

/// All Dyck words of semilength n with exactly `valleys` valleys, in string
/// order ('d' < 'u'). Throws BudgetExceeded when the count is over `budget`.
std::vector<DyckWord> enumerate_dyck(int n, int valleys,
                                     std::uint64_t budget = budget_from_env(kDefaultEnumerationBudget));

/// D(n, r): semilength n, r - 1 valleys.
std::vector<DyckWord> dyck_set(int n, int r);

}  // namespace exring
