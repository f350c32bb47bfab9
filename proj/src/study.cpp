#include "bvp/study.hpp"

#include <fstream>
#include <stdexcept>

#include "bvp/csv.hpp"
#include "bvp/errors.hpp"
#include "bvp/rng.hpp"
#include "bvp/sampler.hpp"
#include "parallel_for.hpp"

namespace bvp {

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

std::vector<StudyBlock> run_study(const StudyConfig& cfg) {
  cfg.truth.validate();
  if (cfg.replications < 1) throw std::domain_error("need replications >= 1");
  if (cfg.sizes.empty()) throw std::domain_error("need at least one size");
  for (std::size_t n : cfg.sizes) {
    if (n < 2) throw std::domain_error("sizes must be at least 2");
  }

  const std::vector<std::string> names = param_names(cfg.fitter);
  const std::vector<double> truth = param_values(cfg.fitter, cfg.truth);
  std::vector<StudyBlock> blocks;

  for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
    const std::size_t n = cfg.sizes[si];
    const std::uint64_t row_seed = replicate_seed(cfg.seed, si + 1);

    std::vector<std::vector<double>> estimates(cfg.replications);
    std::vector<char> ok(cfg.replications, 0);
    detail::parallel_for(cfg.replications, cfg.threads, [&](std::size_t r) {
      const std::uint64_t sub_seed = replicate_seed(row_seed, r + 1);
      try {
        const BivariateSample sample =
            cfg.fitter == FitterId::singular
                ? sample_bvpa(n, cfg.truth, sub_seed)
                : sample_bvpac(n, cfg.truth, sub_seed);
        FitReport rep;
        switch (cfg.fitter) {
          case FitterId::singular:
            rep = em_singular_fit(sample, cfg.fit);
            break;
          case FitterId::ac3_legacy:
            rep = em_ac3_fit(sample, cfg.fit, PseudoVariant::legacy);
            break;
          case FitterId::ac3_modified:
            rep = em_ac3_fit(sample, cfg.fit, PseudoVariant::log_modified);
            break;
          case FitterId::ac7:
            rep = em_ac7_fit(sample, cfg.fit);
            break;
        }
        // Capped fits still carry estimates and enter the averages, matching
        // the tabulation convention; boundary fits do not.
        if (!rep.boundary) {
          estimates[r] = param_values(cfg.fitter, rep.params);
          ok[r] = 1;
        }
      } catch (const restriction_violated_error&) {
      } catch (const degenerate_data_error&) {
      } catch (const sampling_stall_error&) {
      }
    });

    StudyBlock block;
    block.n = n;
    block.replications = cfg.replications;
    std::vector<std::vector<double>> per_param(names.size());
    for (std::size_t r = 0; r < cfg.replications; ++r) {
      if (!ok[r]) {
        ++block.failures;
        continue;
      }
      for (std::size_t j = 0; j < names.size(); ++j) {
        per_param[j].push_back(estimates[r][j]);
      }
    }
    if (per_param[0].empty()) {
      throw degenerate_data_error("every replicate failed at n = " +
                                  std::to_string(n));
    }

    BootstrapReport ci;
    if (cfg.bootstrap_b > 0) {
      ci = parametric_bootstrap(cfg.truth, n, cfg.bootstrap_b, cfg.fitter,
                                cfg.fit, cfg.gamma, splitmix64(row_seed),
                                cfg.threads);
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
      StudyParamRow row;
      row.param = names[j];
      double sum = 0.0;
      double sq = 0.0;
      for (double v : per_param[j]) {
        sum += v;
        const double d = v - truth[j];
        sq += d * d;
      }
      const auto m = static_cast<double>(per_param[j].size());
      row.ae = sum / m;
      row.mse = sq / m;
      if (cfg.bootstrap_b > 0) {
        row.has_ci = true;
        row.ci_lower = ci.params[j].lower;
        row.ci_upper = ci.params[j].upper;
      }
      block.rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void write_study_csv(const std::vector<StudyBlock>& blocks,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "n,parameter,ae,mse,ci_lower,ci_upper,failures\n";
  for (const StudyBlock& b : blocks) {
    for (const StudyParamRow& r : b.rows) {
      out << b.n << ',' << r.param << ',' << format_double(r.ae) << ','
          << format_double(r.mse) << ',';
      if (r.has_ci) {
        out << format_double(r.ci_lower) << ',' << format_double(r.ci_upper);
      } else {
        out << ',';
      }
      out << ',' << b.failures << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace bvp
