#ifndef PARTNET_DIVISOR_VECTOR_HPP
#define PARTNET_DIVISOR_VECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "partnet/config.hpp"

namespace partnet {

/// n(n+1)/2.
constexpr std::uint64_t triangular(std::uint64_t n) noexcept { return n * (n + 1) / 2; }

/* Sparse t(i) x t(j) matrix with two bands: entry(k, l) is -1 when
 * k = l and +1 when k - i = l. Both rules can hit the same output row,
 * in which case the contributions superpose. Never materialized;
 * applying it is a two-term index transform.
 */
struct ShiftMatrixSpec {
    std::uint32_t row_block = 0; // i: rows = t(i)
    std::uint32_t col_block = 0; // j: columns = t(j)
};

/// w[k] = -v[k] (diagonal band) + v[k - i] (lower band), each term
/// present only where its index lands inside v. Throws
/// DimensionMismatch unless v has length t(col_block).
std::vector<std::int64_t> apply_shift_matrix(ShiftMatrixSpec spec,
                                             const std::vector<std::int64_t>& v);

/* Signed vector of length t(n) built by the recurrence
 *
 *   V_1 = [1],   V_n = A(n, n-1) V_{n-1}  then  V_n[t(n-1)+1] += n
 *
 * (1-indexed). Its final block of n entries reads d(n), d(n-1), ...,
 * d(1), where d is the number-of-divisors function.
 */
struct DivisorVector {
    std::uint32_t n = 0;
    std::vector<std::int64_t> entries;
};

/// Runs the recurrence. Throws LimitExceeded when t(n) > entry_budget.
DivisorVector divisor_vector(std::uint32_t n,
                             std::size_t entry_budget = kDefaultNodeBudget);

/// Same vector via the fully expanded telescoped form: the sum over m
/// of m * A(n,n-1)...A(m+1,m) applied to the unit impulse at position
/// t(m-1)+1. Slower; exists as an algebraic cross-check.
DivisorVector divisor_vector_expanded(std::uint32_t n,
                                      std::size_t entry_budget = kDefaultNodeBudget);

/// (d(1), ..., d(n)) read off the reversed final block of the divisor
/// vector of n.
std::vector<std::uint32_t> divisor_counts(std::uint32_t n,
                                          std::size_t entry_budget = kDefaultNodeBudget);

} // namespace partnet

#endif
