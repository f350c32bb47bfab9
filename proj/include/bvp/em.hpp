#pragma once

#include <cstddef>
#include <vector>

#include "bvp/types.hpp"

namespace bvp {

// Posteriors of the latent assignment indicators given the wedge:
// u1 = P(second coordinate came from the shock | z1 < z2), etc.
// u1 + u2 = 1 and w1 + w2 = 1 exactly.
struct PosteriorWeights {
  double u1 = 0.0;
  double u2 = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
};

PosteriorWeights posterior_weights(const Params3& a);

enum class PseudoVariant { legacy, log_modified };

// Surrogates for the unobservable diagonal group of the absolutely
// continuous model: expected missing count n0_tilde and the expected
// per-row contribution. `legacy` estimates E[U0 | U0 smallest] =
// 1/(alpha_sum - 1) and is defined only for alpha_sum > 1; `log_modified`
// estimates E[ln(1+U0) | U0 smallest] = 1/alpha_sum, always defined.
struct PseudoStats {
  double n0_tilde = 0.0;
  double a_value = 0.0;
  PseudoVariant variant = PseudoVariant::log_modified;

  // Contribution of one missing row to the ln(1+x) sums.
  double log_term() const;
};

PseudoStats pseudo_stats(const Params3& a, std::size_t n1, std::size_t n2,
                         PseudoVariant variant);

struct FitConfig {
  Params3 init{1.0, 1.0, 1.0};  // shape initial values (all fitters)
  double init_sigma1 = 1.0;     // scale initial values (seven-parameter fit)
  double init_sigma2 = 1.0;
  double tol = 1e-5;            // relative change of Q between iterations
  std::size_t max_iter = 2000;
  double step_size = 1e-4;      // scale ascent step (seven-parameter fit)
  double sigma_floor = 1e-6;
  double tie_tolerance = kTieTolerance;
};

struct FitReport {
  // Fitted parameters; three-parameter fits report standard margins.
  Params7 params;
  // Pseudo log-likelihood after each completed iteration; drives the stop.
  std::vector<double> q_trace;
  std::size_t iterations = 0;
  bool converged = false;
  bool capped = false;
  // Some shape update had a zero numerator (all data in one wedge); the
  // boundary estimate is reported and iteration stops.
  bool boundary = false;
  // Q at the initial parameters, before any update.
  double q_init = 0.0;
  // Observed log-likelihood of the fitted model at the initial and final
  // parameters (the actual fit-quality scale, unlike the pseudo Q).
  double loglik_init = 0.0;
  double loglik_final = 0.0;

  double q_final() const { return q_trace.empty() ? q_init : q_trace.back(); }
};

// Closed-form maximizer of the weighted pseudo log-likelihood for the
// singular model. For i0 rows the common value 0.5*(x1+x2) is used. Zero
// numerators yield zero shapes; callers flag those as boundary estimates.
Params3 m_step_singular(const DataPartition& part, const BivariateSample& data,
                        const PosteriorWeights& w);

// EM for the singular three-parameter model on standard margins.
FitReport em_singular_fit(const BivariateSample& data, const FitConfig& cfg);

// EM for the absolutely continuous three-parameter model. The legacy
// pseudo-data variant raises restriction_violated_error as soon as an
// iterate has alpha_sum <= 1.
FitReport em_ac3_fit(const BivariateSample& data, const FitConfig& cfg,
                     PseudoVariant variant = PseudoVariant::log_modified);

// d/dsigma_m of sum_i ln bvpac_marginal_pdf(x_mi; p), margin m in {1, 2},
// evaluated analytically (change-of-variable term included).
double marginal_sigma_grad(const BivariateSample& data, int margin,
                           const Params7& p);

// Seven-parameter hybrid: locations plugged in as column minima and held
// fixed; each iteration takes one gradient ascent step on the scales from
// the marginal likelihoods, re-partitions the standardized data, and applies
// the log-modified shape updates.
FitReport em_ac7_fit(const BivariateSample& data, const FitConfig& cfg);

}  // namespace bvp
