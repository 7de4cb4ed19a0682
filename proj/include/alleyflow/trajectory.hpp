#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alleyflow/graph.hpp"
#include "alleyflow/stats.hpp"

namespace alleyflow {

// A respondent's route reduced to an ordered node-id sequence; time
// information is intentionally absent.
struct StaticTrajectory {
  std::string respondent_id;
  std::vector<std::string> nodes;
};

struct TrajectoryParseError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct ParsedTrajectories {
  std::vector<StaticTrajectory> trajectories;
  std::vector<TrajectoryParseError> errors;
};

// One trajectory per line: `respondent_id,node-node-node-...`. Blank lines
// and '#' comments are skipped. Malformed lines are reported per line, not
// fatal; parsing never throws.
ParsedTrajectories parse_trajectories(std::string_view text);

// Inverse of parse_trajectories for valid data (one line per trajectory,
// no comments).
std::string trajectories_text(std::span<const StaticTrajectory> trajectories);

enum class IssueKind {
  unknown_node,
  too_short,
  non_adjacent,
  wrong_way,
};
std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  std::size_t position = 0;  // index in the node sequence (first node of a bad pair)
  IssueKind kind = IssueKind::unknown_node;
  std::string detail;
};

// Validation failures are data, not errors: invalid <=> issues nonempty.
struct TrajectoryValidation {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

// Checks in order: node ids known; length >= 2; every consecutive pair is
// a directed link (two-way alleys accept both directions, one-way links
// only theirs, reported as wrong_way).
TrajectoryValidation validate_trajectory(const StaticTrajectory& trajectory,
                                         const WalkwayGraph& graph);

struct InvalidTrajectory : Error {
  using Error::Error;
};

// Cumulative length of the links along the path. Revisited links count
// once per traversal.
double walking_distance(const StaticTrajectory& trajectory, const WalkwayGraph& graph);

// One tracked position: pedestrian id, timestamp (seconds), planar meters.
struct NtxyRecord {
  std::string pedestrian;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct NonMonotonicTimestamps : Error {
  using Error::Error;
};

struct Polyline {
  std::string pedestrian;
  std::vector<Point> points;
};

// NXY reduction: per pedestrian, positions ordered by timestamp with the
// timestamps dropped and consecutive duplicate positions collapsed. Output
// is sorted by pedestrian id, so input record order does not matter. Equal
// timestamps with different positions are ambiguous and rejected.
std::vector<Polyline> reduce_ntxy(std::span<const NtxyRecord> records);

struct NonAdjacentSnap : Error {
  using Error::Error;
};
struct UnreachableInfill : Error {
  using Error::Error;
};

// Snaps each point to the nearest node (ties to the lower node index) and
// collapses consecutive duplicates. When two consecutive snapped nodes are
// not adjacent: with infill the shortest path between them is inserted,
// without it matching fails with NonAdjacentSnap.
std::vector<std::string> map_match(std::span<const Point> polyline,
                                   const WalkwayGraph& graph,
                                   bool infill);

struct ZeroDenominator : Error {
  using Error::Error;
};

// Median ratio: median observed walking distance over median shortest-path
// distance. Medians, not means: the two distributions are skewed
// differently and the median is the more robust center.
double lambda_index(double median_walking_distance, double median_shortest_path);

}  // namespace alleyflow
