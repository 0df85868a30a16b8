#ifndef PARTNET_EXPORT_HPP
#define PARTNET_EXPORT_HPP

#include <string>

#include "partnet/network.hpp"

namespace partnet {

/// Serializes the network as a DOT digraph. Node labels are the
/// space-separated terms; divisor/sigma nodes append their signed value
/// in parentheses. Edges carry order=<r> and firstJump=<bool>.
std::string to_dot(const PartitionNetwork& net);

/* Canonical JSON document: keys in the fixed order kind, parameter
 * ("a1_max" for the divisor kind, "n" otherwise), nodes, edges; node
 * and edge arrays ordered by id. The output is byte-stable across runs.
 */
std::string to_json(const PartitionNetwork& net);

/// Inverse of to_json. Throws std::invalid_argument on malformed
/// documents (unknown kind, duplicate ids, dangling edge endpoints).
PartitionNetwork network_from_json(const std::string& text);

} // namespace partnet

#endif
