#include "bvp/bvpa.hpp"

#include <cmath>
#include <limits>

#include "bvp/errors.hpp"
#include "bvp/pareto.hpp"

namespace bvp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_tie(double z1, double z2, double tol) {
  const double scale = std::max({1.0, std::fabs(z1), std::fabs(z2)});
  return std::fabs(z1 - z2) <= tol * scale;
}

}  // namespace

BvpaDensity bvpa_pdf(double x1, double x2, const Params7& p,
                     double tie_tolerance) {
  p.validate();
  if (x1 < p.mu1 || x2 < p.mu2) {
    throw support_error("observation below location support");
  }
  const double z1 = (x1 - p.mu1) / p.sigma1;
  const double z2 = (x2 - p.mu2) / p.sigma2;
  if (is_tie(z1, z2, tie_tolerance)) {
    // Singular density per unit of x1 along the line z1 = z2.
    const double v =
        (p.alpha0 / p.sigma1) * std::pow(1.0 + z1, -p.alpha_sum() - 1.0);
    return {v, PdfCase::f0};
  }
  if (z1 < z2) {
    const double v = pareto_pdf(x1, p.mu1, p.sigma1, p.alpha1) *
                     pareto_pdf(x2, p.mu2, p.sigma2, p.alpha0 + p.alpha2);
    return {v, PdfCase::f1};
  }
  const double v = pareto_pdf(x1, p.mu1, p.sigma1, p.alpha0 + p.alpha1) *
                   pareto_pdf(x2, p.mu2, p.sigma2, p.alpha2);
  return {v, PdfCase::f2};
}

double bvpac_pdf(double z1, double z2, const Params7& p,
                 double tie_tolerance) {
  p.validate();
  if (z1 < p.mu1 || z2 < p.mu2) {
    throw support_error("observation below location support");
  }
  const double s1 = (z1 - p.mu1) / p.sigma1;
  const double s2 = (z2 - p.mu2) / p.sigma2;
  if (is_tie(s1, s2, tie_tolerance)) {
    throw diagonal_input_error(
        "absolutely continuous density undefined on the diagonal");
  }
  const double c = p.norm_const();
  if (s1 < s2) {
    return c * pareto_pdf(z1, p.mu1, p.sigma1, p.alpha1) *
           pareto_pdf(z2, p.mu2, p.sigma2, p.alpha0 + p.alpha2);
  }
  return c * pareto_pdf(z1, p.mu1, p.sigma1, p.alpha0 + p.alpha1) *
         pareto_pdf(z2, p.mu2, p.sigma2, p.alpha2);
}

double bvpac_wedge_density(double z1, double z2, const Params7& p,
                           PdfCase branch) {
  p.validate();
  if (z1 < p.mu1 || z2 < p.mu2) {
    throw support_error("observation below location support");
  }
  const double c = p.norm_const();
  if (branch == PdfCase::f1) {
    return c * pareto_pdf(z1, p.mu1, p.sigma1, p.alpha1) *
           pareto_pdf(z2, p.mu2, p.sigma2, p.alpha0 + p.alpha2);
  }
  if (branch == PdfCase::f2) {
    return c * pareto_pdf(z1, p.mu1, p.sigma1, p.alpha0 + p.alpha1) *
           pareto_pdf(z2, p.mu2, p.sigma2, p.alpha2);
  }
  throw std::domain_error("branch must be f1 or f2");
}

double bvpac_marginal_pdf(double z, int margin, const Params7& p) {
  p.validate();
  if (margin != 1 && margin != 2) {
    throw std::domain_error("margin must be 1 or 2");
  }
  const double mu = margin == 1 ? p.mu1 : p.mu2;
  const double sigma = margin == 1 ? p.sigma1 : p.sigma2;
  const double aj = margin == 1 ? p.alpha1 : p.alpha2;
  if (z < mu) {
    throw support_error("marginal evaluated below location support");
  }
  const double asum = p.alpha_sum();
  const double c = p.norm_const();
  return c * pareto_pdf(z, mu, sigma, p.alpha0 + aj) -
         c * (p.alpha0 / asum) * pareto_pdf(z, mu, sigma, asum);
}

LogLik loglik_ac7(const BivariateSample& data, const Params7& p) {
  p.validate();
  const std::size_t n = data.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (data.x1[i] < p.mu1 || data.x2[i] < p.mu2) {
      return {kNegInf, true};
    }
  }
  const DataPartition part =
      partition(data, p.mu1, p.mu2, p.sigma1, p.sigma2);
  if (!part.i0.empty()) {
    // Diagonal ties carry no density under the absolutely continuous law.
    return {kNegInf, true};
  }
  const double asum = p.alpha_sum();
  const double a02 = p.alpha0 + p.alpha2;
  const double a01 = p.alpha0 + p.alpha1;
  const double n1 = static_cast<double>(part.n1());
  const double n2 = static_cast<double>(part.n2());

  double value = static_cast<double>(n) *
                 (std::log(asum) - std::log(p.alpha1 + p.alpha2));
  value += n1 * (std::log(p.alpha1) + std::log(a02) - std::log(p.sigma1) -
                 std::log(p.sigma2));
  value += n2 * (std::log(p.alpha2) + std::log(a01) - std::log(p.sigma1) -
                 std::log(p.sigma2));
  for (std::size_t i : part.i1) {
    value -= (p.alpha1 + 1.0) * std::log1p((data.x1[i] - p.mu1) / p.sigma1);
    value -= (a02 + 1.0) * std::log1p((data.x2[i] - p.mu2) / p.sigma2);
  }
  for (std::size_t i : part.i2) {
    value -= (a01 + 1.0) * std::log1p((data.x1[i] - p.mu1) / p.sigma1);
    value -= (p.alpha2 + 1.0) * std::log1p((data.x2[i] - p.mu2) / p.sigma2);
  }
  return {value, false};
}

LogLik loglik_ac3(const BivariateSample& data, const Params3& a) {
  return loglik_ac7(data, Params7::standard(a));
}

BivariateSample standardize(const BivariateSample& data, double mu1,
                            double mu2, double sigma1, double sigma2) {
  if (!(sigma1 > 0.0 && sigma2 > 0.0)) {
    throw invalid_parameter_error("scale parameters must be positive");
  }
  BivariateSample out;
  out.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out.push_back((data.x1[i] - mu1) / sigma1, (data.x2[i] - mu2) / sigma2);
  }
  return out;
}

DataPartition partition(const BivariateSample& data, double mu1, double mu2,
                        double sigma1, double sigma2, double tie_tolerance) {
  if (!(sigma1 > 0.0 && sigma2 > 0.0)) {
    throw invalid_parameter_error("scale parameters must be positive");
  }
  DataPartition part;
  part.tie_tolerance = tie_tolerance;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double z1 = (data.x1[i] - mu1) / sigma1;
    const double z2 = (data.x2[i] - mu2) / sigma2;
    if (is_tie(z1, z2, tie_tolerance)) {
      part.i0.push_back(i);
    } else if (z1 < z2) {
      part.i1.push_back(i);
    } else {
      part.i2.push_back(i);
    }
  }
  return part;
}

}  // namespace bvp
