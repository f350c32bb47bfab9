#include "bvp/em.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bvp/bvpa.hpp"
#include "bvp/errors.hpp"
#include "bvp/pareto.hpp"

namespace bvp {

namespace {

// ln(1+x) sums per wedge of an already standardized sample. For i0 rows the
// common value 0.5*(x1+x2) is used.
struct WedgeSums {
  double s0 = 0.0;
  double s1x1 = 0.0;
  double s1x2 = 0.0;
  double s2x1 = 0.0;
  double s2x2 = 0.0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

WedgeSums wedge_sums(const DataPartition& part, const BivariateSample& data) {
  WedgeSums s;
  s.n0 = part.n0();
  s.n1 = part.n1();
  s.n2 = part.n2();
  for (std::size_t i : part.i0) {
    s.s0 += std::log1p(0.5 * (data.x1[i] + data.x2[i]));
  }
  for (std::size_t i : part.i1) {
    s.s1x1 += std::log1p(data.x1[i]);
    s.s1x2 += std::log1p(data.x2[i]);
  }
  for (std::size_t i : part.i2) {
    s.s2x1 += std::log1p(data.x1[i]);
    s.s2x2 += std::log1p(data.x2[i]);
  }
  return s;
}

// Numerators and denominators of the three shape updates. `diag_count` and
// `diag_log` stand for the diagonal group: the observed (n0, s0) pair for the
// singular model, the pseudo pair (n0_tilde, n0_tilde * log term) otherwise.
struct QParts {
  double num0, num1, num2;
  double den0, den1, den2;
};

QParts q_parts(const WedgeSums& s, const PosteriorWeights& w,
               double diag_count, double diag_log) {
  const double n1 = static_cast<double>(s.n1);
  const double n2 = static_cast<double>(s.n2);
  QParts q{};
  q.num0 = diag_count + w.u1 * n1 + w.w1 * n2;
  q.num1 = n1 + w.w2 * n2;
  q.num2 = n2 + w.u2 * n1;
  q.den0 = diag_log + s.s2x1 + s.s1x2;
  q.den1 = diag_log + s.s1x1 + s.s2x1;
  q.den2 = diag_log + s.s1x2 + s.s2x2;
  return q;
}

// Weighted pseudo log-likelihood. Terms with a zero numerator contribute
// nothing (the boundary limit), so boundary iterates stay evaluable.
double q_value(const Params3& a, const QParts& q) {
  double v = -a.alpha0 * q.den0 - a.alpha1 * q.den1 - a.alpha2 * q.den2;
  if (q.num0 > 0.0) v += q.num0 * std::log(a.alpha0);
  if (q.num1 > 0.0) v += q.num1 * std::log(a.alpha1);
  if (q.num2 > 0.0) v += q.num2 * std::log(a.alpha2);
  return v;
}

Params3 solve_m_step(const QParts& q) {
  if (!(q.den0 > 0.0 && q.den1 > 0.0 && q.den2 > 0.0)) {
    throw degenerate_data_error("zero denominator in shape update");
  }
  return {q.num0 / q.den0, q.num1 / q.den1, q.num2 / q.den2};
}

bool on_boundary(const Params3& a) {
  return a.alpha0 == 0.0 || a.alpha1 == 0.0 || a.alpha2 == 0.0;
}

double rel_change(double q_new, double q_old) {
  const double d = std::fabs(q_new - q_old);
  const double scale = std::fabs(q_old);
  return scale > 0.0 ? d / scale : d;
}

double singular_loglik(const BivariateSample& data, const Params3& a) {
  const Params7 p = Params7::standard(a);
  double v = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    v += std::log(bvpa_pdf(data.x1[i], data.x2[i], p).value);
  }
  return v;
}

void require_nonnegative(const BivariateSample& data) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.x1[i] < 0.0 || data.x2[i] < 0.0) {
      throw support_error("standard-margin fit requires coordinates >= 0");
    }
  }
}

}  // namespace

PosteriorWeights posterior_weights(const Params3& a) {
  a.validate();
  PosteriorWeights w;
  w.u1 = a.alpha0 / (a.alpha0 + a.alpha2);
  w.u2 = a.alpha2 / (a.alpha0 + a.alpha2);
  w.w1 = a.alpha0 / (a.alpha0 + a.alpha1);
  w.w2 = a.alpha1 / (a.alpha0 + a.alpha1);
  return w;
}

double PseudoStats::log_term() const {
  return variant == PseudoVariant::legacy ? std::log1p(a_value) : a_value;
}

PseudoStats pseudo_stats(const Params3& a, std::size_t n1, std::size_t n2,
                         PseudoVariant variant) {
  a.validate();
  PseudoStats s;
  s.variant = variant;
  s.n0_tilde = static_cast<double>(n1 + n2) * a.alpha0 / (a.alpha1 + a.alpha2);
  if (variant == PseudoVariant::legacy) {
    if (!(a.sum() > 1.0)) {
      throw restriction_violated_error(
          "legacy pseudo-data requires alpha0+alpha1+alpha2 > 1");
    }
    s.a_value = 1.0 / (a.sum() - 1.0);
  } else {
    s.a_value = 1.0 / a.sum();
  }
  return s;
}

Params3 m_step_singular(const DataPartition& part, const BivariateSample& data,
                        const PosteriorWeights& w) {
  const WedgeSums s = wedge_sums(part, data);
  return solve_m_step(q_parts(s, w, static_cast<double>(s.n0), s.s0));
}

FitReport em_singular_fit(const BivariateSample& data, const FitConfig& cfg) {
  cfg.init.validate();
  if (data.empty()) throw std::domain_error("empty sample");
  require_nonnegative(data);
  const DataPartition part =
      partition(data, 0.0, 0.0, 1.0, 1.0, cfg.tie_tolerance);
  const WedgeSums sums = wedge_sums(part, data);
  const double diag_count = static_cast<double>(sums.n0);

  FitReport rep;
  Params3 a = cfg.init;
  rep.loglik_init = singular_loglik(data, a);
  rep.q_init = q_value(a, q_parts(sums, posterior_weights(a), diag_count,
                                  sums.s0));
  double q_prev = rep.q_init;
  while (rep.iterations < cfg.max_iter) {
    const PosteriorWeights w = posterior_weights(a);
    const QParts q = q_parts(sums, w, diag_count, sums.s0);
    const Params3 next = solve_m_step(q);
    const double qv = q_value(next, q);
    rep.q_trace.push_back(qv);
    ++rep.iterations;
    a = next;
    if (on_boundary(a)) {
      rep.boundary = true;
      break;
    }
    if (rel_change(qv, q_prev) < cfg.tol) {
      rep.converged = true;
      break;
    }
    q_prev = qv;
  }
  rep.capped = !rep.converged && !rep.boundary;
  rep.params = Params7::standard(a);
  // A zero shape is outside the model's parameter space.
  rep.loglik_final = rep.boundary ? std::numeric_limits<double>::quiet_NaN()
                                  : singular_loglik(data, a);
  return rep;
}

FitReport em_ac3_fit(const BivariateSample& data, const FitConfig& cfg,
                     PseudoVariant variant) {
  cfg.init.validate();
  if (data.empty()) throw std::domain_error("empty sample");
  require_nonnegative(data);
  const DataPartition part =
      partition(data, 0.0, 0.0, 1.0, 1.0, cfg.tie_tolerance);
  if (part.n0() > 0) {
    throw diagonal_input_error(
        "absolutely continuous fit requires tie-free data");
  }
  const WedgeSums sums = wedge_sums(part, data);

  FitReport rep;
  Params3 a = cfg.init;
  rep.loglik_init = loglik_ac3(data, a).value;
  {
    const PseudoStats ps = pseudo_stats(a, sums.n1, sums.n2, variant);
    rep.q_init = q_value(a, q_parts(sums, posterior_weights(a), ps.n0_tilde,
                                    ps.n0_tilde * ps.log_term()));
  }
  double q_prev = rep.q_init;
  while (rep.iterations < cfg.max_iter) {
    const PosteriorWeights w = posterior_weights(a);
    const PseudoStats ps = pseudo_stats(a, sums.n1, sums.n2, variant);
    const QParts q =
        q_parts(sums, w, ps.n0_tilde, ps.n0_tilde * ps.log_term());
    const Params3 next = solve_m_step(q);
    const double qv = q_value(next, q);
    rep.q_trace.push_back(qv);
    ++rep.iterations;
    a = next;
    if (on_boundary(a)) {
      rep.boundary = true;
      break;
    }
    if (rel_change(qv, q_prev) < cfg.tol) {
      rep.converged = true;
      break;
    }
    q_prev = qv;
  }
  rep.capped = !rep.converged && !rep.boundary;
  rep.params = Params7::standard(a);
  rep.loglik_final = rep.boundary ? std::numeric_limits<double>::quiet_NaN()
                                  : loglik_ac3(data, a).value;
  return rep;
}

double marginal_sigma_grad(const BivariateSample& data, int margin,
                           const Params7& p) {
  p.validate();
  if (margin != 1 && margin != 2) {
    throw std::domain_error("margin must be 1 or 2");
  }
  const double mu = margin == 1 ? p.mu1 : p.mu2;
  const double sigma = margin == 1 ? p.sigma1 : p.sigma2;
  const double aj = margin == 1 ? p.alpha1 : p.alpha2;
  const double asum = p.alpha_sum();
  const double c = p.norm_const();
  const std::vector<double>& col = margin == 1 ? data.x1 : data.x2;

  // d/dsigma of (alpha/sigma)(1+t)^(-alpha-1) with t = (x-mu)/sigma:
  //   (alpha/sigma^2) (1+t)^(-alpha-2) (alpha t - 1).
  const auto dpdf = [&](double x, double alpha) {
    const double t = (x - mu) / sigma;
    return (alpha / (sigma * sigma)) * std::pow(1.0 + t, -alpha - 2.0) *
           (alpha * t - 1.0);
  };

  double grad = 0.0;
  for (double x : col) {
    if (x < mu) throw support_error("observation below location support");
    const double f = c * pareto_pdf(x, mu, sigma, p.alpha0 + aj) -
                     c * (p.alpha0 / asum) * pareto_pdf(x, mu, sigma, asum);
    const double df =
        c * dpdf(x, p.alpha0 + aj) - c * (p.alpha0 / asum) * dpdf(x, asum);
    grad += df / f;
  }
  return grad;
}

FitReport em_ac7_fit(const BivariateSample& data, const FitConfig& cfg) {
  cfg.init.validate();
  if (!(cfg.init_sigma1 > 0.0 && cfg.init_sigma2 > 0.0)) {
    throw invalid_parameter_error("initial scales must be positive");
  }
  if (data.size() < 2) throw std::domain_error("need at least two rows");
  const auto [min1, max1] =
      std::minmax_element(data.x1.begin(), data.x1.end());
  const auto [min2, max2] =
      std::minmax_element(data.x2.begin(), data.x2.end());
  if (!(*max1 > *min1) || !(*max2 > *min2)) {
    throw degenerate_data_error("need at least two distinct values per margin");
  }

  // Location plug-in, held fixed for the whole fit.
  Params7 p{*min1, *min2, cfg.init_sigma1, cfg.init_sigma2, cfg.init.alpha0,
            cfg.init.alpha1, cfg.init.alpha2};

  FitReport rep;
  rep.loglik_init = loglik_ac7(data, p).value;
  {
    const BivariateSample z =
        standardize(data, p.mu1, p.mu2, p.sigma1, p.sigma2);
    const DataPartition part =
        partition(z, 0.0, 0.0, 1.0, 1.0, cfg.tie_tolerance);
    const WedgeSums sums = wedge_sums(part, z);
    const PseudoStats ps = pseudo_stats(p.alphas(), sums.n1, sums.n2,
                                        PseudoVariant::log_modified);
    rep.q_init = q_value(p.alphas(),
                         q_parts(sums, posterior_weights(p.alphas()),
                                 ps.n0_tilde, ps.n0_tilde * ps.log_term()));
  }
  double q_prev = rep.q_init;
  bool zero_shape = false;
  while (rep.iterations < cfg.max_iter) {
    // One ascent step on each scale from the marginal likelihoods, floored.
    const double g1 = marginal_sigma_grad(data, 1, p);
    const double g2 = marginal_sigma_grad(data, 2, p);
    p.sigma1 = std::max(p.sigma1 + cfg.step_size * g1, cfg.sigma_floor);
    p.sigma2 = std::max(p.sigma2 + cfg.step_size * g2, cfg.sigma_floor);

    const BivariateSample z =
        standardize(data, p.mu1, p.mu2, p.sigma1, p.sigma2);
    const DataPartition part =
        partition(z, 0.0, 0.0, 1.0, 1.0, cfg.tie_tolerance);
    const WedgeSums sums = wedge_sums(part, z);
    if (sums.n1 == 0 || sums.n2 == 0) rep.boundary = true;

    const PosteriorWeights w = posterior_weights(p.alphas());
    const PseudoStats ps = pseudo_stats(p.alphas(), sums.n1, sums.n2,
                                        PseudoVariant::log_modified);
    const QParts q =
        q_parts(sums, w, ps.n0_tilde, ps.n0_tilde * ps.log_term());
    const Params3 next = solve_m_step(q);
    const double qv = q_value(next, q);
    rep.q_trace.push_back(qv);
    ++rep.iterations;
    p.alpha0 = next.alpha0;
    p.alpha1 = next.alpha1;
    p.alpha2 = next.alpha2;
    if (on_boundary(next)) {
      rep.boundary = true;
      zero_shape = true;
      break;
    }
    if (rel_change(qv, q_prev) < cfg.tol) {
      rep.converged = true;
      break;
    }
    q_prev = qv;
  }
  rep.capped = !rep.converged && !zero_shape;
  rep.params = p;
  rep.loglik_final = zero_shape ? std::numeric_limits<double>::quiet_NaN()
                                : loglik_ac7(data, p).value;
  return rep;
}

}  // namespace bvp
