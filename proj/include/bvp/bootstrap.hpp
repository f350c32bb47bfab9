#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bvp/em.hpp"
#include "bvp/types.hpp"

namespace bvp {

enum class FitterId { singular, ac3_legacy, ac3_modified, ac7 };

std::string fitter_name(FitterId id);

// Nearest-rank empirical quantile: sorted[ceil(q*n)] with 1-based rank.
// Shared by the bootstrap percentiles and the threshold module.
double nearest_rank_quantile(std::vector<double> values, double q);

// Empirical (gamma/2, 1-gamma/2) interval under the nearest-rank rule.
std::pair<double, double> percentile_interval(std::vector<double> values,
                                              double gamma);

struct ParamSummary {
  std::string name;
  double mean = 0.0;
  double mse = 0.0;  // mean squared deviation from the fitted point estimate
  double lower = 0.0;
  double upper = 0.0;
};

struct BootstrapReport {
  std::size_t replicates = 0;     // B
  std::size_t failure_count = 0;  // capped or errored refits, excluded above
  std::vector<ParamSummary> params;
};

// Parametric bootstrap around params_hat: replicate b simulates a size-n
// sample from params_hat (the absolutely continuous law for the ac fitters,
// the full law for the singular one), refits with the same config, and the
// estimates are summarized per parameter. Replicate b uses
// replicate_seed(seed, b), so execution order and thread count do not change
// the result.
BootstrapReport parametric_bootstrap(const Params7& params_hat, std::size_t n,
                                     std::size_t b, FitterId fitter,
                                     const FitConfig& config, double gamma,
                                     std::uint64_t seed, unsigned threads = 1);

}  // namespace bvp
