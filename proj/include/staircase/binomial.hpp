#pragma once

#include <cmath>
#include <vector>

#include "numeric.hpp"

// Exact binomial coefficients with the uniform zero rule: any out-of-range
// or half-integral argument yields 0. Closed-form path counts below rely on
// that rule to absorb their parity constraints.

namespace staircase {

namespace detail {
inline const std::vector<BigInt>& pascal_row(long long n) {
  static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
  while (static_cast<long long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1, BigInt(1));
    for (std::size_t k = 1; k + 1 < row.size(); ++k)
      row[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)];
}
}  // namespace detail

inline BigInt binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  return detail::pascal_row(n)[static_cast<std::size_t>(k)];
}

// binom(n, num/2): zero when num is odd (half-integral lower argument).
inline BigInt binom_half(long long n, long long twice_k) {
  if (twice_k % 2 != 0) return BigInt(0);
  return binom(n, twice_k / 2);
}

// log binom(n, k) for doubles-only scans; requires a valid range.
inline double log_binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

inline BigInt catalan(long long k) {
  return binom(2 * k, k) / BigInt(k + 1);
}

}  // namespace staircase
