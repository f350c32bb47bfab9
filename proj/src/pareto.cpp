#include "bvp/pareto.hpp"

#include <cmath>
#include <stdexcept>

#include "bvp/errors.hpp"

namespace bvp {

namespace {

void check_scale_shape(double sigma, double alpha) {
  if (!(sigma > 0.0)) {
    throw invalid_parameter_error("sigma must be positive");
  }
  if (!(alpha > 0.0)) {
    throw invalid_parameter_error("alpha must be positive");
  }
}

}  // namespace

double pareto_pdf(double x, double mu, double sigma, double alpha) {
  check_scale_shape(sigma, alpha);
  if (x < mu) return 0.0;
  const double z = (x - mu) / sigma;
  return (alpha / sigma) * std::pow(1.0 + z, -alpha - 1.0);
}

double pareto_survival(double x, double mu, double sigma, double alpha) {
  check_scale_shape(sigma, alpha);
  if (x < mu) return 1.0;
  const double z = (x - mu) / sigma;
  return std::pow(1.0 + z, -alpha);
}

double pareto_inverse_cdf(double p, double mu, double sigma, double alpha) {
  check_scale_shape(sigma, alpha);
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::domain_error("quantile level must lie in [0, 1)");
  }
  return mu + sigma * (std::pow(1.0 - p, -1.0 / alpha) - 1.0);
}

}  // namespace bvp
