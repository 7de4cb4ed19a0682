#pragma once

#include <string>

#include "json.hpp"

#include "alleyflow/stats.hpp"

namespace alleyflow {

// Stats serialize with these exact field names, in this order:
// n, mean, median, mode, std, q1, q3, iqr, skewness, fence_low,
// fence_high, ci95_low, ci95_high.
nlohmann::ordered_json stats_json(const DescriptiveStats& stats);

// Fixed-order `key,value` lines for CLI table output.
std::string stats_table(const DescriptiveStats& stats);

}  // namespace alleyflow
