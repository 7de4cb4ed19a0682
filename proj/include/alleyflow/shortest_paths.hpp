#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "alleyflow/graph.hpp"
#include "alleyflow/stats.hpp"

namespace alleyflow {

struct UnreachablePairs : Error {
  UnreachablePairs(const std::string& msg,
                   std::vector<std::pair<std::size_t, std::size_t>> p)
      : Error(msg), pairs(std::move(p)) {}
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// All-pairs shortest distances plus a predecessor matrix. pred(i, j) is
// the node before j on the chosen i->j path, -1 when there is none.
struct ShortestPathResult {
  Matrix<double> dist;
  Matrix<std::int32_t> pred;
};

// Floyd-Warshall over D. The k-outer / i,j-inner loop order is fixed and
// updates only on strict improvement, so ties resolve toward the lowest
// intermediate node index and the output is deterministic.
ShortestPathResult floyd_warshall(const WalkwayGraph& graph);

// Path from `from` to `to` as node indices, or nullopt when unreachable.
// Throws std::out_of_range for invalid node indices (malformed input is
// distinct from an unreachable pair).
std::optional<std::vector<std::size_t>> reconstruct_path(const ShortestPathResult& result,
                                                         std::size_t from,
                                                         std::size_t to);

// Distribution of shortest-path distances over all ordered pairs i != j
// with a positive distance. Refuses disconnected venues: throws
// UnreachablePairs listing the offending pairs rather than silently
// truncating the population.
DescriptiveStats apsp_distance_stats(const ShortestPathResult& result, double bin_width);

}  // namespace alleyflow
