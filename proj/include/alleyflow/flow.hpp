#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alleyflow/graph.hpp"
#include "alleyflow/stats.hpp"
#include "alleyflow/trajectory.hpp"

namespace alleyflow {

struct InvalidTrajectoryInBatch : Error {
  InvalidTrajectoryInBatch(const std::string& msg, std::vector<std::string> ids)
      : Error(msg), respondent_ids(std::move(ids)) {}
  std::vector<std::string> respondent_ids;
};
struct AllZeroFlow : Error {
  using Error::Error;
};
struct NonPositiveMaxRent : Error {
  using Error::Error;
};

// Directed per-link traversal counts accumulated over a trajectory batch.
// Counts are integer-exact absolute frequencies; the relative form is the
// alpha matrix below.
struct FlowMatrix {
  Matrix<std::int64_t> counts;
  std::string study_label;
};

// Adds 1 to F[o][d] for every consecutive (o, d) pair of every trajectory;
// repeat traversals each count. The batch is all-or-nothing: any invalid
// trajectory fails the whole call, naming the respondents.
FlowMatrix accumulate_flow(std::span<const StaticTrajectory> trajectories,
                           const WalkwayGraph& graph,
                           std::string study_label = {});

// Flow normalized by its scalar maximum; entries lie in [0, 1] and the
// zero/nonzero support equals that of F.
struct AlphaMatrix {
  Matrix<double> values;
};

AlphaMatrix attractiveness_index(const FlowMatrix& flow);

// Undirected per-alley totals: F[i][j] + F[j][i]. One-way alleys
// contribute their single direction. Ordered by (i, j), i < j.
struct AlleyTotal {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t total = 0;
};

std::vector<AlleyTotal> alley_totals(const FlowMatrix& flow, const WalkwayGraph& graph);

enum class FlowCategory { low, medium, high, very_high };
std::string_view to_string(FlowCategory category);

// Split points between the four categories, echoed in every output so a
// categorization is reproducible.
struct CategoryThresholds {
  double low = 0.0;   // totals <= low            -> low
  double mid = 0.0;   // low  < totals <= mid     -> medium
  double high = 0.0;  // mid  < totals <= high    -> high, above -> very_high
};

struct AlleyCategory {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t total = 0;
  FlowCategory category = FlowCategory::low;
};

struct CategorizedAlleys {
  std::vector<AlleyCategory> alleys;
  CategoryThresholds thresholds;
};

// Default thresholds are the quartiles of the nonzero totals; ties assign
// downward and zero-flow alleys are always low. Explicit thresholds may be
// passed instead.
CategorizedAlleys categorize_flows(std::span<const AlleyTotal> totals,
                                   std::optional<CategoryThresholds> overrides = std::nullopt);

// Distribution of alpha over all directed link entries (adjacency support),
// zero-flow links included.
DescriptiveStats attractiveness_stats(const AlphaMatrix& alpha,
                                      const WalkwayGraph& graph,
                                      double bin_width);

// rent[i][j] = alpha[i][j] * max_rent.
Matrix<double> relative_rents(const AlphaMatrix& alpha, double max_rent);

}  // namespace alleyflow
