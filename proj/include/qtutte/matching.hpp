#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qtutte {

/// Maximum bipartite matching (Hopcroft-Karp). adj[u] lists right vertices
/// adjacent to left vertex u; the order of each list steers which maximum
/// matching is found. Returns the right partner of each left vertex or -1.
std::vector<int> hopcroft_karp(std::size_t left, std::size_t right, const std::vector<std::vector<int>>& adj);

/// Exact cover by Knuth's dancing links. rows[r] lists the columns row r
/// covers. Returns the chosen rows (ascending), nullopt if no cover exists.
/// Throws ResourceError once more than node_budget search nodes are visited.
std::optional<std::vector<std::size_t>> exact_cover(std::size_t columns,
                                                    const std::vector<std::vector<std::size_t>>& rows,
                                                    std::uint64_t node_budget = 50'000'000);

}  // namespace qtutte
