#include "cbperm/exact.hpp"

#include <limits>
#include <string>

#include "cbperm/errors.hpp"

namespace cbperm {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

Count pow2(int e) {
  if (e < 0) throw DomainError("pow2: negative exponent " + std::to_string(e));
  if (e > 62) throw Overflow("pow2: 2^" + std::to_string(e) + " exceeds 64 bits");
  return Count{1} << e;
}

Count binomial(Count n, Count k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // r * (n - k + i) is divisible by i at every step, so the 128-bit
  // intermediate is the only place a spurious overflow could occur.
  __int128 r = 1;
  for (Count i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<Count>::max())
      throw Overflow("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") exceeds 64 bits");
  }
  return static_cast<Count>(r);
}

Count central_binomial(int n) {
  if (n < 0) throw DomainError("central_binomial: negative argument");
  return binomial(2 * Count{n}, n);
}

Count catalan(int n) {
  if (n < 0) throw DomainError("catalan: negative argument");
  // C(2n, n) / (n + 1) = C(2n, n) - C(2n, n + 1), which avoids a division
  // and stays in range one step longer.
  return checked_sub(binomial(2 * Count{n}, n), binomial(2 * Count{n}, n + 1));
}

}  // namespace cbperm
