#pragma once

namespace bvp {

// Pareto (second kind) density (alpha/sigma) * (1 + (x-mu)/sigma)^(-alpha-1).
// The support is closed on the left: pareto_pdf(mu, ...) = alpha/sigma.
// Returns 0 below mu so mixture-style formulas stay total.
double pareto_pdf(double x, double mu, double sigma, double alpha);

// Survival (1 + (x-mu)/sigma)^(-alpha) for x >= mu, 1 below mu.
double pareto_survival(double x, double mu, double sigma, double alpha);

// Quantile of the cdf: mu + sigma * ((1-p)^(-1/alpha) - 1) for p in [0, 1).
double pareto_inverse_cdf(double p, double mu, double sigma, double alpha);

}  // namespace bvp
