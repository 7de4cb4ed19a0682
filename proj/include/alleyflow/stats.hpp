#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alleyflow/errors.hpp"

namespace alleyflow {

struct StatsError : Error {
  using Error::Error;
};
struct TooFewValues : StatsError {
  using StatsError::StatsError;
};
struct NonPositiveBinWidth : StatsError {
  using StatsError::StatsError;
};
struct NonFiniteValue : StatsError {
  using StatsError::StatsError;
};
struct TooManyBins : StatsError {
  using StatsError::StatsError;
};

// Descriptive summary of a sample.
//   - quartiles: linear interpolation of order statistics (the common
//     "type 7" convention)
//   - std_dev: sample standard deviation (n-1 denominator)
//   - skewness: adjusted Fisher-Pearson coefficient; 0 when the sample has
//     zero variance or fewer than 3 values
//   - mode: midpoint of the most populated histogram bin, lowest midpoint
//     on ties; the first bin is centered on the sample minimum
//   - fences: Tukey outlier bounds q1 - 1.5*iqr and q3 + 1.5*iqr
//   - ci95: mean +- 1.96 * std_dev / sqrt(n)
struct DescriptiveStats {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  double mode = 0.0;
  double std_dev = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double skewness = 0.0;
  double fence_low = 0.0;
  double fence_high = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

struct HistogramBin {
  double midpoint = 0.0;
  std::size_t count = 0;
};

// Fixed-width bins anchored at `origin`: value v lands in bin
// floor((v - origin) / bin_width). Bins are contiguous from the first to
// the last occupied bin; interior empty bins are kept for plotting.
struct Histogram {
  double bin_width = 0.0;
  double origin = 0.0;
  std::vector<HistogramBin> bins;
};

DescriptiveStats describe(std::span<const double> values, double bin_width);

Histogram histogram(std::span<const double> values, double bin_width, double origin);

// Linear-interpolation quantile of an ascending-sorted nonempty sample,
// p in [0, 1].
double quantile_sorted(std::span<const double> sorted_values, double p);

}  // namespace alleyflow
