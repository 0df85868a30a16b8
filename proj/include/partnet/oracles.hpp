#ifndef PARTNET_ORACLES_HPP
#define PARTNET_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "partnet/partition.hpp"

namespace partnet::oracles {

// Independent classical implementations, used for differential testing
// of the jump-based methods. Deliberately shares no code with them.

/// p(n) by Euler's pentagonal-number recurrence.
mpz_class partition_count_pentagonal(std::uint32_t n);

/// All partitions of n as non-increasing part lists, by textbook
/// recursive descent.
std::vector<std::vector<term_t>> partitions_bruteforce(term_t n);

struct DivisorStats {
    std::uint64_t count = 0; // d(n)
    std::uint64_t sum = 0;   // sigma_1(n)
};

/// Number and sum of divisors by trial division up to sqrt(n).
DivisorStats divisor_stats_trial(std::uint64_t n);

/// All partitions of n into pairwise distinct parts, as decreasing
/// part lists.
std::vector<std::vector<term_t>> distinct_partitions_bruteforce(term_t n);

} // namespace partnet::oracles

#endif
