#pragma once

#include <gdp/graph.hpp>

#include <cstdint>
#include <span>
#include <utility>

namespace gdp {

/// Zachary's karate club network (34 members, 78 ties), 1-based edge pairs.
std::span<const std::pair<int, int>> karate_edge_pairs();

/// FNV-1a over the flattened 1-based endpoints.
std::uint64_t edge_checksum(std::span<const std::pair<int, int>> pairs);

/// The karate graph with 0-based nodes. Throws DatasetCorrupt if the embedded
/// list does not match its checksum.
SimpleGraph karate_graph();

DegreePartition karate_partition();

} // namespace gdp
