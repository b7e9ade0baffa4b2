#pragma once

#include <cstdint>

namespace cbperm {

/// Exact counts. Every arithmetic helper below throws Overflow instead of
/// wrapping.
using Count = std::int64_t;

Count checked_add(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_mul(Count a, Count b);
Count pow2(int e);

/// C(n, k); zero when k < 0 or k > n (also for negative n).
Count binomial(Count n, Count k);

/// C(2n, n).
Count central_binomial(int n);

/// C(2n, n) / (n + 1).
Count catalan(int n);

}  // namespace cbperm
