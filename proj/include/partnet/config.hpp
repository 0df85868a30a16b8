#ifndef PARTNET_CONFIG_HPP
#define PARTNET_CONFIG_HPP

#include <cstddef>

namespace partnet {

// Cap on materialized network nodes / vector entries. Streaming
// enumeration is unaffected; only explicit builds check it.
inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Budget from the PARTNET_NODE_BUDGET environment variable, or the default.
std::size_t node_budget_from_env();

} // namespace partnet

#endif
