#pragma once

#include <cstdint>
#include <vector>

#include "alleyflow/graph.hpp"
#include "alleyflow/matrix.hpp"
#include "alleyflow/trajectory.hpp"

namespace alleyflow {

struct DegenerateGrid : Error {
  using Error::Error;
};
struct DisconnectedGraph : Error {
  using Error::Error;
};
struct TooLargeForExhaustive : Error {
  using Error::Error;
};
struct InvalidPolicy : Error {
  using Error::Error;
};

// Node and link records in the same shape build_graph consumes, so
// synthetic venues exercise the full ingestion path.
struct VenueInputs {
  std::vector<Node> nodes;
  std::vector<Link> links;
};

// rows x cols lattice with two-way links between lattice neighbors.
// Node ids are "r<row>c<col>", row-major order, spacing meters apart.
VenueInputs make_grid_venue(std::size_t rows, std::size_t cols, double spacing);

// Random strongly-connected venue: a two-way spanning tree over nodes at
// uniform random coordinates plus `extra_links` additional links, each
// one-way with probability `one_way_fraction`. Fully determined by seed.
VenueInputs make_random_venue(std::size_t node_count,
                              std::size_t extra_links,
                              double one_way_fraction,
                              std::uint64_t seed);

enum class WalkerKind {
  shortest_path,  // optimal route between a sampled origin/destination pair
  random_walk,    // uniform neighbor steps
  shopping_list,  // shortest paths chained through sampled waypoints
};

struct WalkerPolicy {
  WalkerKind kind = WalkerKind::shortest_path;
  std::size_t waypoints = 2;     // intermediate stops (shopping_list)
  std::size_t step_budget = 32;  // steps per walk (random_walk)
  bool no_backtrack = false;     // forbid immediate reversal when avoidable
  std::uint64_t seed = 0;
};

// Deterministic batch: the seed fully determines the output. Every
// generated trajectory validates against the venue. Requires a strongly
// connected graph.
std::vector<StaticTrajectory> generate_walkers(const WalkwayGraph& graph,
                                               const WalkerPolicy& policy,
                                               std::size_t count);

// Timed records along a node sequence (one fix per node, seconds_per_link
// apart) for tests that feed the NTXY reduction path.
std::vector<NtxyRecord> ntxy_from_trajectory(const StaticTrajectory& trajectory,
                                             const WalkwayGraph& graph,
                                             double start_time,
                                             double seconds_per_link);

enum class OracleMode {
  exhaustive,  // enumerate all simple paths; graphs of at most 7 nodes
  dijkstra,    // independent per-source search; any size
};

// Reference all-pairs shortest distances computed without Floyd-Warshall,
// in the same matrix layout.
Matrix<double> brute_force_apsp(const WalkwayGraph& graph, OracleMode mode);

}  // namespace alleyflow
