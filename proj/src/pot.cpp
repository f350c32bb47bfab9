#include "bvp/pot.hpp"

#include <stdexcept>

#include "bvp/bootstrap.hpp"
#include "bvp/errors.hpp"

namespace bvp {

PotResult pot_transform(const BivariateSample& raw, const PotConfig& cfg) {
  if (raw.empty()) throw std::domain_error("empty sample");

  PotResult res;
  if (cfg.mode == ThresholdMode::quantile) {
    if (!(cfg.q1 > 0.0 && cfg.q1 < 1.0 && cfg.q2 > 0.0 && cfg.q2 < 1.0)) {
      throw std::domain_error("quantile levels must lie in (0, 1)");
    }
    res.x0_1 = nearest_rank_quantile(raw.x1, cfg.q1);
    res.x0_2 = nearest_rank_quantile(raw.x2, cfg.q2);
  } else {
    res.x0_1 = cfg.x0_1;
    res.x0_2 = cfg.x0_2;
  }
  if (!(res.x0_1 > 0.0 && res.x0_2 > 0.0)) {
    throw std::domain_error("thresholds must be positive");
  }

  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.x1[i] > res.x0_1 && raw.x2[i] > res.x0_2) {
      res.data.push_back(raw.x1[i] / res.x0_1, raw.x2[i] / res.x0_2);
    }
  }
  res.retained = res.data.size();
  if (res.retained == 0) {
    throw empty_result_error("no rows exceed both thresholds");
  }
  return res;
}

}  // namespace bvp
