#include "partnet/enumeration.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "partnet/counting.hpp"
#include "partnet/errors.hpp"

namespace partnet {

PartitionStream::PartitionStream(term_t n) : n_(n) {
    if (n == 0)
        throw std::invalid_argument("cannot enumerate partitions of 0");
}

void PartitionStream::descend(term_t order) {
    // in-place jump: a1 -> (a1 - order, order)
    current_[0] -= order;
    current_.insert(current_.begin() + 1, order);
    // Children of the new node may use any order up to the arrival
    // order that keeps the first term at or above the last.
    const term_t slack = current_.front() - current_.back();
    frames_.push_back({std::min(order, slack)});
}

void PartitionStream::ascend() {
    // merge the first two terms back together
    current_[1] += current_[0];
    current_.erase(current_.begin());
    frames_.pop_back();
}

std::optional<Partition> PartitionStream::next() {
    if (!started_) {
        started_ = true;
        current_ = {n_};
        frames_.push_back({1});
        return Partition(current_);
    }
    while (!frames_.empty()) {
        Frame& frame = frames_.back();
        if (frames_.size() == 1) {
            // root: initial jumps ascend 1..floor(n/2)
            const term_t r = frame.next_order;
            if (r > n_ / 2) {
                frames_.pop_back();
                break;
            }
            frame.next_order = r + 1;
            descend(r);
            return Partition(current_);
        }
        // interior: orders descend toward 1
        const term_t r = frame.next_order;
        if (r == 0) {
            ascend();
            continue;
        }
        frame.next_order = r - 1;
        descend(r);
        return Partition(current_);
    }
    return std::nullopt;
}

PartitionNetwork build_partition_network(term_t n, bool annotate,
                                         std::size_t node_budget) {
    {
        const mpz_class total = partition_count(n);
        if (total > static_cast<unsigned long>(node_budget))
            throw LimitExceeded("partition network of " + std::to_string(n) + " has " +
                                total.get_str() + " nodes, over the budget of " +
                                std::to_string(node_budget));
    }

    PartitionNetwork net;
    net.kind = annotate ? NetworkKind::partition_annotated : NetworkKind::partition;
    net.parameter = n;

    std::map<std::vector<term_t>, std::uint32_t> ids;
    PartitionStream stream(n);
    while (auto p = stream.next()) {
        const auto id = static_cast<std::uint32_t>(net.nodes.size());
        NetworkNode node{id, p->terms(), std::nullopt};
        if (annotate)
            node.value = order1_jump_set_size(*p);
        net.nodes.push_back(std::move(node));
        ids.emplace(p->terms(), id);

        if (auto parent = predecessor(*p)) {
            const std::uint32_t parent_id = ids.at(parent->terms());
            // the second term is the order of the jump that created p
            net.edges.push_back({parent_id, id, p->second(), parent_id == 0});
        }
    }
    return net;
}

} // namespace partnet
