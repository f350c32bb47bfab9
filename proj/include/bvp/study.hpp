#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bvp/bootstrap.hpp"
#include "bvp/em.hpp"
#include "bvp/types.hpp"

namespace bvp {

// Monte Carlo simulation study: for each sample size, `replications`
// datasets are drawn from `truth` and refitted; the table reports the
// average estimate and the mean squared error against the truth. When
// bootstrap_b > 0 a parametric bootstrap around the truth adds percentile
// interval columns.
struct StudyConfig {
  Params7 truth;
  std::vector<std::size_t> sizes;
  std::size_t replications = 1;
  FitterId fitter = FitterId::ac3_modified;
  FitConfig fit;
  std::uint64_t seed = 0;
  std::size_t bootstrap_b = 0;
  double gamma = 0.05;
  unsigned threads = 1;
};

struct StudyParamRow {
  std::string param;
  double ae = 0.0;
  double mse = 0.0;
  bool has_ci = false;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
};

struct StudyBlock {
  std::size_t n = 0;
  std::size_t replications = 0;
  std::size_t failures = 0;  // replicates whose fit raised an error
  std::vector<StudyParamRow> rows;
};

std::vector<StudyBlock> run_study(const StudyConfig& cfg);

// CSV layout: n,parameter,ae,mse,ci_lower,ci_upper,failures (interval cells
// empty when no bootstrap was requested).
void write_study_csv(const std::vector<StudyBlock>& blocks,
                     const std::string& path);

}  // namespace bvp
