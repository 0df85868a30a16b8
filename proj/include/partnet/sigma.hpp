#ifndef PARTNET_SIGMA_HPP
#define PARTNET_SIGMA_HPP

#include <cstdint>

#include "partnet/config.hpp"
#include "partnet/distinct.hpp"
#include "partnet/network.hpp"

namespace partnet {

/// sum_{j=1}^{smallest} (largest - smallest + j), evaluated in closed
/// form as smallest*(largest - smallest) + smallest*(smallest + 1)/2.
/// Requires 1 <= smallest <= largest. For largest == smallest == n this
/// is the n-th triangular number.
std::uint64_t inner_sum(std::uint32_t largest, std::uint32_t smallest);

struct SigmaTerm {
    DistinctPartition partition;
    term_t largest;
    term_t smallest;
    std::int64_t weight; // sign * inner_sum(largest, smallest)
};

SigmaTerm make_sigma_term(const SignedTraceTerm& term);

/// Signed sum of inner_sum(largest, smallest) over all distinct-part
/// partitions of n (+ for an odd number of parts, - for even); equals
/// the sum of divisors of n.
std::uint64_t sigma1(term_t n);

/// Forest over all distinct-part partitions summing to at most n_max,
/// each node weighted by its signed inner sum. The single-part nodes
/// form the main branch with weights t(1)..t(n_max). Throws
/// LimitExceeded over node_budget.
PartitionNetwork build_sigma_network(term_t n_max,
                                     std::size_t node_budget = kDefaultNodeBudget);

} // namespace partnet

#endif
