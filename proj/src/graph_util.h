// Internal helpers shared by the graph algorithms.
#pragma once

#include <cstdint>
#include <vector>

namespace lpbn::detail {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Iterative Tarjan. Components come out sinks first.
std::vector<std::vector<std::uint32_t>> tarjan(const Adjacency& adj);

/// Shortest path from `from` to `to` restricted to vertices with
/// allowed[v] == true; empty if unreachable. The path includes both ends.
std::vector<std::uint32_t> shortestPath(const Adjacency& adj, std::uint32_t from, std::uint32_t to,
                                        const std::vector<bool>* allowed = nullptr);

} // namespace lpbn::detail
