#ifndef PARTNET_NETWORK_HPP
#define PARTNET_NETWORK_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "partnet/config.hpp"
#include "partnet/partition.hpp"

namespace partnet {

enum class NetworkKind {
    partition,           // plain partition tree of one n
    partition_annotated, // same, nodes labeled with order-1 block sizes
    divisor,             // distinct-part forest, signed smallest terms
    sigma,               // distinct-part forest, divisor-sum weights
};

std::string_view to_string(NetworkKind kind) noexcept;
std::optional<NetworkKind> network_kind_from_string(std::string_view name) noexcept;

struct NetworkNode {
    std::uint32_t id = 0;
    std::vector<term_t> terms;
    // annotation (partition_annotated), signed smallest term (divisor)
    // or signed weight (sigma); absent for the plain partition kind
    std::optional<std::int64_t> value;

    friend bool operator==(const NetworkNode&, const NetworkNode&) = default;
};

struct NetworkEdge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    term_t order = 0;
    bool first_jump = false; // edge leaving a root

    friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

/* Directed acyclic graph of partitions joined by jump edges. Nodes are
 * listed in id order and every non-root node has exactly one incoming
 * edge, so the structure is a tree (partition kinds) or forest
 * (divisor/sigma kinds).
 */
struct PartitionNetwork {
    NetworkKind kind = NetworkKind::partition;
    term_t parameter = 0; // n, or the largest initial term for the divisor kind
    std::vector<NetworkNode> nodes;
    std::vector<NetworkEdge> edges;

    friend bool operator==(const PartitionNetwork&, const PartitionNetwork&) = default;
};

} // namespace partnet

#endif
