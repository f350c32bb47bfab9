#pragma once

#include "bvp/types.hpp"

namespace bvp {

enum class PdfCase { f0, f1, f2 };

struct BvpaDensity {
  double value = 0.0;
  PdfCase branch = PdfCase::f0;
};

// Joint density of the full (singular + absolutely continuous) law.
// Below the diagonal of standardized coordinates the f1 branch fires, above
// it f2, and on it f0 -- the singular density expressed per unit of x1 along
// the line (z1 = z2).
BvpaDensity bvpa_pdf(double x1, double x2, const Params7& p,
                     double tie_tolerance = kTieTolerance);

// Absolutely continuous density c*f1 / c*f2. Exactly diagonal input has no
// density; throws diagonal_input_error.
double bvpac_pdf(double z1, double z2, const Params7& p,
                 double tie_tolerance = kTieTolerance);

// One wedge's branch (c*f1 or c*f2) evaluated regardless of which side of
// the diagonal the point lies on. Lets grid evaluators resolve diagonal
// cells by a one-sided limit; PdfCase::f0 is not a valid branch here.
double bvpac_wedge_density(double z1, double z2, const Params7& p,
                           PdfCase branch);

// Marginal density of the absolutely continuous law, margin in {1, 2}:
//   c * f_PA(z; mu, sigma, alpha0+alpha_j)
//     - c * alpha0/(alpha0+alpha1+alpha2) * f_PA(z; mu, sigma, alpha_sum).
double bvpac_marginal_pdf(double z, int margin, const Params7& p);

// Log-likelihood value with a tagged sentinel: when any observation violates
// the support (or sits exactly on the diagonal) `value` is -infinity and the
// flag is set, so fitters can detect the condition without exceptions.
struct LogLik {
  double value = 0.0;
  bool support_violation = false;
};

LogLik loglik_ac7(const BivariateSample& data, const Params7& p);
LogLik loglik_ac3(const BivariateSample& data, const Params3& a);

// z_ji = (x_ji - mu_j) / sigma_j, elementwise.
BivariateSample standardize(const BivariateSample& data, double mu1,
                            double mu2, double sigma1, double sigma2);

// Classify rows by the standardized comparison; ties within the relative
// tolerance go to i0.
DataPartition partition(const BivariateSample& data, double mu1, double mu2,
                        double sigma1, double sigma2,
                        double tie_tolerance = kTieTolerance);

}  // namespace bvp
