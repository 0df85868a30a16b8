#ifndef PARTNET_ENUMERATION_HPP
#define PARTNET_ENUMERATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "partnet/config.hpp"
#include "partnet/network.hpp"
#include "partnet/partition.hpp"

namespace partnet {

/* Depth-first stream over the partitions of n, each yielded exactly
 * once in jump form. The bare [n] comes first; the initial jump orders
 * are explored in increasing order 1..floor(n/2); every later branch is
 * explored in decreasing order, from the previous jump's order down to
 * 1. The resulting order is fixed, so output can be golden-tested.
 *
 * Single consumer; independent streams never share state.
 */
class PartitionStream {
public:
    explicit PartitionStream(term_t n);

    /// Next partition in DFS order, or nullopt when exhausted.
    std::optional<Partition> next();

private:
    struct Frame {
        term_t next_order; // next jump order to try at this node
    };

    void descend(term_t order);
    void ascend();

    term_t n_;
    bool started_ = false;
    std::vector<term_t> current_; // partition along the active DFS path
    std::vector<Frame> frames_;   // frames_[0] is the root [n]
};

template <typename Fn>
void for_each_partition(term_t n, Fn&& fn) {
    PartitionStream stream(n);
    while (auto p = stream.next())
        fn(*p);
}

/// Materializes the full jump tree of n. Each non-root node keeps the
/// order of the jump that created it; with annotate, every node also
/// carries its order-1 jump set size. Throws LimitExceeded when p(n)
/// is larger than node_budget.
PartitionNetwork build_partition_network(term_t n, bool annotate,
                                         std::size_t node_budget = kDefaultNodeBudget);

} // namespace partnet

#endif
