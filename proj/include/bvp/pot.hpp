#pragma once

#include <cstddef>

#include "bvp/types.hpp"

namespace bvp {

enum class ThresholdMode { quantile, absolute };

// Peak-over-threshold configuration. Under quantile mode the thresholds are
// the nearest-rank empirical quantiles of each column; under absolute mode
// they are given directly. A row is retained only when both coordinates
// strictly exceed their thresholds.
struct PotConfig {
  ThresholdMode mode = ThresholdMode::quantile;
  double q1 = 0.9;
  double q2 = 0.9;
  double x0_1 = 0.0;
  double x0_2 = 0.0;
};

struct PotResult {
  BivariateSample data;  // ratios x_ji / x0_j, every coordinate > 1
  double x0_1 = 0.0;
  double x0_2 = 0.0;
  std::size_t retained = 0;
};

PotResult pot_transform(const BivariateSample& raw, const PotConfig& cfg);

}  // namespace bvp
