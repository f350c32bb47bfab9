#include "bvp/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bvp/errors.hpp"
#include "bvp/rng.hpp"
#include "bvp/sampler.hpp"
#include "parallel_for.hpp"

namespace bvp {

std::string fitter_name(FitterId id) {
  switch (id) {
    case FitterId::singular: return "singular";
    case FitterId::ac3_legacy: return "ac3_legacy";
    case FitterId::ac3_modified: return "ac3_modified";
    case FitterId::ac7: return "ac7";
  }
  return "unknown";
}

double nearest_rank_quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::domain_error("quantile of empty list");
  std::sort(values.begin(), values.end());
  const double x = q * static_cast<double>(values.size());
  // Small slack so levels like 0.2 * 5 do not round past the exact rank.
  auto rank = static_cast<std::size_t>(std::ceil(x - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

std::pair<double, double> percentile_interval(std::vector<double> values,
                                              double gamma) {
  if (values.empty()) throw std::domain_error("interval of empty list");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::domain_error("gamma must lie in (0, 1)");
  }
  const double lo = nearest_rank_quantile(values, gamma / 2.0);
  const double hi = nearest_rank_quantile(std::move(values), 1.0 - gamma / 2.0);
  return {lo, hi};
}

namespace {

std::vector<std::string> param_names(FitterId fitter) {
  if (fitter == FitterId::ac7) {
    return {"mu1", "mu2", "sigma1", "sigma2", "alpha0", "alpha1", "alpha2"};
  }
  return {"alpha0", "alpha1", "alpha2"};
}

std::vector<double> param_values(FitterId fitter, const Params7& p) {
  if (fitter == FitterId::ac7) {
    return {p.mu1, p.mu2, p.sigma1, p.sigma2, p.alpha0, p.alpha1, p.alpha2};
  }
  return {p.alpha0, p.alpha1, p.alpha2};
}

}  // namespace

BootstrapReport parametric_bootstrap(const Params7& params_hat, std::size_t n,
                                     std::size_t b, FitterId fitter,
                                     const FitConfig& config, double gamma,
                                     std::uint64_t seed, unsigned threads) {
  params_hat.validate();
  if (b < 1) throw std::domain_error("need at least one replicate");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::domain_error("gamma must lie in (0, 1)");
  }

  std::vector<std::vector<double>> estimates(b);
  std::vector<char> ok(b, 0);
  detail::parallel_for(b, threads, [&](std::size_t i) {
    const std::uint64_t sub_seed = replicate_seed(seed, i + 1);
    try {
      const BivariateSample sample =
          fitter == FitterId::singular
              ? sample_bvpa(n, params_hat, sub_seed)
              : sample_bvpac(n, params_hat, sub_seed);
      FitReport rep;
      switch (fitter) {
        case FitterId::singular:
          rep = em_singular_fit(sample, config);
          break;
        case FitterId::ac3_legacy:
          rep = em_ac3_fit(sample, config, PseudoVariant::legacy);
          break;
        case FitterId::ac3_modified:
          rep = em_ac3_fit(sample, config, PseudoVariant::log_modified);
          break;
        case FitterId::ac7:
          rep = em_ac7_fit(sample, config);
          break;
      }
      if (rep.converged) {
        estimates[i] = param_values(fitter, rep.params);
        ok[i] = 1;
      }
    } catch (const restriction_violated_error&) {
    } catch (const degenerate_data_error&) {
    } catch (const sampling_stall_error&) {
    }
  });

  BootstrapReport report;
  report.replicates = b;
  const std::vector<std::string> names = param_names(fitter);
  const std::vector<double> truth = param_values(fitter, params_hat);

  std::vector<std::vector<double>> per_param(names.size());
  for (std::size_t i = 0; i < b; ++i) {
    if (!ok[i]) {
      ++report.failure_count;
      continue;
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
      per_param[j].push_back(estimates[i][j]);
    }
  }
  if (report.failure_count == b) {
    throw bootstrap_failure_error("all " + std::to_string(b) +
                                  " replicates failed");
  }

  for (std::size_t j = 0; j < names.size(); ++j) {
    ParamSummary s;
    s.name = names[j];
    double sum = 0.0;
    double sq = 0.0;
    for (double v : per_param[j]) {
      sum += v;
      const double d = v - truth[j];
      sq += d * d;
    }
    const auto m = static_cast<double>(per_param[j].size());
    s.mean = sum / m;
    s.mse = sq / m;
    std::tie(s.lower, s.upper) = percentile_interval(per_param[j], gamma);
    report.params.push_back(std::move(s));
  }
  return report;
}

}  // namespace bvp
