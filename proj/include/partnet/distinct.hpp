#ifndef PARTNET_DISTINCT_HPP
#define PARTNET_DISTINCT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partnet/config.hpp"
#include "partnet/network.hpp"
#include "partnet/partition.hpp"

namespace partnet {

/* A partition into pairwise distinct parts, stored as the invariant
 * initial term followed by the remaining parts in increasing order:
 * [a1, a2, ..., am] with a2 < a3 < ... < am < a1. Read right to left,
 * the tail is the descending sequence of jump orders that built the
 * partition from [a1].
 */
class DistinctPartition {
public:
    /// tail must be strictly increasing with every element below initial.
    explicit DistinctPartition(term_t initial, std::vector<term_t> tail = {});

    const std::vector<term_t>& terms() const noexcept { return terms_; }
    term_t initial() const noexcept { return terms_.front(); } // largest part
    term_t smallest() const noexcept;                          // last jump order
    std::size_t part_count() const noexcept { return terms_.size(); }
    term_t sum() const noexcept { return n_; }

    /// +1 for an odd number of parts, -1 for an even number.
    int sign() const noexcept { return part_count() % 2 == 1 ? 1 : -1; }

    std::string to_string() const;

    friend bool operator==(const DistinctPartition&, const DistinctPartition&) = default;
    friend std::strong_ordering operator<=>(const DistinctPartition& a,
                                            const DistinctPartition& b) {
        return a.terms_ <=> b.terms_;
    }

private:
    std::vector<term_t> terms_;
    term_t n_ = 0;
};

struct SignedTraceTerm {
    DistinctPartition partition;
    term_t smallest; // minimum part = order of the last jump
    int sign;        // +1 odd part count, -1 even
};

/// Inserts r directly after the initial term, growing the partitioned
/// number by r. Throws InvalidInvariantJump unless r is strictly
/// smaller than every part.
DistinctPartition invariant_jump(const DistinctPartition& p, JumpOrder r);

/* All 2^(a1-1) distinct-part partitions whose largest part is exactly
 * a1 — one per subset of {1, ..., a1-1} — streamed by increasing subset
 * size, then lexicographically within a size.
 */
class DescendingJumpSetStream {
public:
    explicit DescendingJumpSetStream(term_t a1);
    std::optional<DistinctPartition> next();

private:
    void advance();

    term_t a1_;
    std::vector<term_t> combo_; // current tail, ascending
    bool done_ = false;
};

/* One signed term per partition of n into distinct parts, each exactly
 * once. Partitions are grouped by ascending initial term; within a
 * group the remaining parts are chosen largest-first. The tail of each
 * partition sums to n minus the initial term.
 */
class DistinctPartitionStream {
public:
    explicit DistinctPartitionStream(term_t n);
    std::optional<SignedTraceTerm> next();

private:
    struct Frame {
        term_t remaining; // sum still to place, >= 1
        term_t candidate; // next part to try, strictly descending
    };

    std::optional<SignedTraceTerm> emit(term_t final_part);

    term_t n_;
    term_t a1_ = 0;
    std::vector<term_t> chosen_; // parts picked so far, descending
    std::vector<Frame> frames_;
};

template <typename Fn>
void for_each_distinct_partition(term_t n, Fn&& fn) {
    DistinctPartitionStream stream(n);
    while (auto term = stream.next())
        fn(*term);
}

/// Signed sum of smallest parts over all distinct-part partitions of n;
/// equals the number of divisors of n.
long long trace(term_t n);

/// Forest of the complete descending jump sets for initial terms
/// 1..a1_max; every node carries its signed smallest term. Total node
/// count is 2^a1_max - 1. Throws LimitExceeded over node_budget.
PartitionNetwork build_divisor_network(term_t a1_max,
                                       std::size_t node_budget = kDefaultNodeBudget);

} // namespace partnet

#endif
