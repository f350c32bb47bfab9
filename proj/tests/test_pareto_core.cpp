#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bvp/bvpa.hpp"
#include "bvp/errors.hpp"
#include "bvp/pareto.hpp"
#include "bvp/rng.hpp"
#include "bvp/sampler.hpp"
#include "bvp/types.hpp"
#include "support/quad.hpp"

using namespace bvp;

namespace {

// Figure parameter sets used throughout the density tests.
const Params7 xi1{0.0, 0.0, 1.0, 0.5, 1.0, 0.3, 1.4};
const Params7 xi2{1.0, 2.0, 0.4, 0.5, 2.0, 1.2, 1.4};
const Params7 xi3{0.0, 0.0, 1.4, 0.5, 1.0, 1.0, 1.4};
const Params7 xi4{0.0, 0.0, 1.4, 0.5, 2.0, 0.4, 0.5};

// Mass of one wedge of the absolutely continuous density, by nested
// quadrature of the implementation's branch values.
double wedge_mass(const Params7& p, PdfCase branch) {
  if (branch == PdfCase::f1) {
    return quad::upper(
        [&](double x2) {
          const double diag = p.mu1 + p.sigma1 * (x2 - p.mu2) / p.sigma2;
          if (diag <= p.mu1) return 0.0;
          return quad::finite(
              [&](double x1) { return bvpac_wedge_density(x1, x2, p, branch); },
              p.mu1, diag, 1e-8);
        },
        p.mu2, 1e-7);
  }
  return quad::upper(
      [&](double x1) {
        const double diag = p.mu2 + p.sigma2 * (x1 - p.mu1) / p.sigma1;
        if (diag <= p.mu2) return 0.0;
        return quad::finite(
            [&](double x2) { return bvpac_wedge_density(x1, x2, p, branch); },
            p.mu2, diag, 1e-8);
      },
      p.mu1, 1e-7);
}

}  // namespace

TEST_CASE("pareto_pdf values and edge cases") {
  CHECK(pareto_pdf(0.0, 0.0, 1.0, 2.0) == doctest::Approx(2.0));
  CHECK(pareto_pdf(1.0, 0.0, 1.0, 1.0) == doctest::Approx(0.25));
  // x - mu equals sigma, so the kernel is 2^(-alpha-1).
  CHECK(pareto_pdf(12.979, 10.855, 2.124, 1.743) ==
        doctest::Approx(1.743 / 2.124 * std::pow(2.0, -2.743)));
  CHECK(pareto_pdf(-0.5, 0.0, 1.0, 1.0) == 0.0);
  // Support closed on the left: density at mu is alpha/sigma.
  CHECK(pareto_pdf(3.0, 3.0, 2.0, 5.0) == doctest::Approx(2.5));
  CHECK_THROWS_AS(pareto_pdf(1.0, 0.0, 0.0, 1.0), invalid_parameter_error);
  CHECK_THROWS_AS(pareto_pdf(1.0, 0.0, 1.0, -2.0), invalid_parameter_error);
}

TEST_CASE("pareto_survival values") {
  CHECK(pareto_survival(0.0, 0.0, 1.0, 3.7) == doctest::Approx(1.0));
  CHECK(pareto_survival(1.0, 0.0, 1.0, 1.0) == doctest::Approx(0.5));
  CHECK(pareto_survival(3.0, 0.0, 1.0, 2.0) == doctest::Approx(1.0 / 16.0));
  CHECK(pareto_survival(-1.0, 0.0, 1.0, 2.0) == 1.0);
  CHECK_THROWS_AS(pareto_survival(1.0, 0.0, -1.0, 2.0),
                  invalid_parameter_error);
}

TEST_CASE("pareto_inverse_cdf values and round trip") {
  CHECK(pareto_inverse_cdf(0.0, 0.0, 1.0, 1.0) == doctest::Approx(0.0));
  CHECK(pareto_inverse_cdf(0.75, 0.0, 1.0, 2.0) == doctest::Approx(1.0));
  CHECK(pareto_inverse_cdf(0.5, 1.0, 2.0, 1.0) == doctest::Approx(3.0));
  CHECK_THROWS_AS(pareto_inverse_cdf(1.0, 0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(pareto_inverse_cdf(-0.1, 0.0, 1.0, 1.0), std::domain_error);

  for (double p : {0.0, 0.1, 0.5, 0.9, 0.99}) {
    for (double alpha : {0.4, 1.0, 3.0}) {
      const double x = pareto_inverse_cdf(p, 0.7, 2.5, alpha);
      CHECK(pareto_survival(x, 0.7, 2.5, alpha) ==
            doctest::Approx(1.0 - p).epsilon(1e-12));
    }
  }
}

TEST_CASE("pareto_pdf integrates to one") {
  struct Cfg {
    double mu, sigma, alpha;
  };
  for (const Cfg& c : {Cfg{0.0, 1.0, 2.0}, Cfg{1.0, 2.0, 0.7},
                       Cfg{10.855, 2.124, 1.743}}) {
    const double mass = quad::upper(
        [&](double x) { return pareto_pdf(x, c.mu, c.sigma, c.alpha); }, c.mu,
        1e-8);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("bvpa_pdf branches and values") {
  const Params7 p{0.0, 0.0, 1.0, 1.0, 1.0, 0.3, 1.4};
  const BvpaDensity at_origin = bvpa_pdf(0.0, 0.0, p);
  CHECK(at_origin.branch == PdfCase::f0);
  CHECK(at_origin.value == doctest::Approx(1.0));  // alpha0 / sigma1

  const Params7 ones{0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  const BvpaDensity d = bvpa_pdf(0.0, 1.0, ones);
  CHECK(d.branch == PdfCase::f1);
  // alpha1 (alpha0+alpha2) (1+x2)^(-3) (1+x1)^(-2) = 2/8
  CHECK(d.value == doctest::Approx(0.25));

  CHECK(bvpa_pdf(5.0, 1.0, ones).branch == PdfCase::f2);
  CHECK_THROWS_AS(bvpa_pdf(-1.0, 0.0, ones), support_error);
}

TEST_CASE("bvpa_pdf total probability splits into wedges and singular mass") {
  for (const Params7& p : {Params7{0.0, 0.0, 1.0, 1.0, 2.0, 0.4, 0.5}, xi2}) {
    const double c = p.norm_const();
    // The absolutely continuous branches are c * the full-law branches.
    const double w1 = wedge_mass(p, PdfCase::f1) / c;
    const double w2 = wedge_mass(p, PdfCase::f2) / c;
    // The singular line carries density per unit x1; parameterize by the
    // standardized value t with dx1 = sigma1 dt.
    const double singular = quad::upper(
        [&](double t) {
          const BvpaDensity d =
              bvpa_pdf(p.mu1 + p.sigma1 * t, p.mu2 + p.sigma2 * t, p);
          REQUIRE(d.branch == PdfCase::f0);
          return d.value * p.sigma1;
        },
        0.0, 1e-8);
    CHECK(w1 + w2 + singular == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(singular ==
          doctest::Approx(p.alpha0 / p.alpha_sum()).epsilon(1e-6));
  }
}

TEST_CASE("bvpac_pdf normalizing constant and symmetry") {
  CHECK(xi1.norm_const() == doctest::Approx(2.7 / 1.7));

  const Params7 sym{3.0, 3.0, 0.7, 0.7, 1.1, 0.9, 0.9};
  UniformStream u(2024);
  for (int i = 0; i < 50; ++i) {
    const double a = 3.0 + 4.0 * u.next();
    const double b = 3.0 + 4.0 * u.next();
    if (a == b) continue;
    CHECK(bvpac_pdf(a, b, sym) == doctest::Approx(bvpac_pdf(b, a, sym)));
  }

  CHECK_THROWS_AS(bvpac_pdf(2.0, 2.0, sym), diagonal_input_error);
  CHECK_THROWS_AS(bvpac_pdf(2.0, 1.0, sym), support_error);
}

TEST_CASE("bvpac_pdf integrates to one") {
  const double mass =
      wedge_mass(xi2, PdfCase::f1) + wedge_mass(xi2, PdfCase::f2);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("wedge probabilities sum to one and match the ordering race") {
  const double p1 = wedge_mass(xi2, PdfCase::f1);
  const double p2 = wedge_mass(xi2, PdfCase::f2);
  CHECK(p1 + p2 == doctest::Approx(1.0).epsilon(1e-4));
  // ln(1+U_j) are independent exponentials, so the lower wedge has mass
  // alpha1/(alpha1+alpha2) after conditioning away the diagonal.
  CHECK(p1 == doctest::Approx(xi2.alpha1 / (xi2.alpha1 + xi2.alpha2))
                  .epsilon(1e-4));
}

TEST_CASE("bvpac_marginal_pdf matches the independence limit") {
  const Params7 nearly{1.0, 2.0, 0.4, 0.5, 1e-12, 1.2, 1.4};
  for (double z : {1.1, 1.5, 3.0, 10.0}) {
    const double expected = pareto_pdf(z, 1.0, 0.4, 1.2);
    CHECK(bvpac_marginal_pdf(z, 1, nearly) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("bvpac_marginal_pdf normalizes and errors below support") {
  for (int margin : {1, 2}) {
    const double mu = margin == 1 ? xi1.mu1 : xi1.mu2;
    const double mass = quad::upper(
        [&](double z) { return bvpac_marginal_pdf(z, margin, xi1); }, mu,
        1e-8);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(bvpac_marginal_pdf(0.5, 1, xi2), support_error);
  CHECK_THROWS_AS(bvpac_marginal_pdf(1.5, 3, xi2), std::domain_error);
}

TEST_CASE("bvpac_marginal_pdf equals the marginalized joint") {
  for (double z : {xi2.mu1 + 0.5 * xi2.sigma1, xi2.mu1 + 2.0 * xi2.sigma1}) {
    const double diag = xi2.mu2 + xi2.sigma2 * (z - xi2.mu1) / xi2.sigma1;
    double joint = quad::upper(
        [&](double x2) { return bvpac_wedge_density(z, x2, xi2, PdfCase::f1); },
        diag, 1e-9);
    if (diag > xi2.mu2) {
      joint += quad::finite(
          [&](double x2) {
            return bvpac_wedge_density(z, x2, xi2, PdfCase::f2);
          },
          xi2.mu2, diag, 1e-9);
    }
    CHECK(bvpac_marginal_pdf(z, 1, xi2) ==
          doctest::Approx(joint).epsilon(1e-5));
  }
}

TEST_CASE("loglik_ac3 pinned value and dual path") {
  BivariateSample one;
  one.push_back(0.0, 1.0);
  const Params3 ones{1.0, 1.0, 1.0};
  const LogLik l = loglik_ac3(one, ones);
  CHECK_FALSE(l.support_violation);
  // ln c + ln f1 = ln(3/2) + ln(1/4) = ln 3 - 3 ln 2.
  CHECK(l.value ==
        doctest::Approx(std::log(3.0) - 3.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(l.value ==
        doctest::Approx(std::log(bvpac_pdf(0.0, 1.0, Params7::standard(ones))))
            .epsilon(1e-12));
}

TEST_CASE("loglik_ac7 agrees with the per-point density path") {
  const BivariateSample data = sample_bvpac(100, xi2, 991);
  const LogLik l = loglik_ac7(data, xi2);
  REQUIRE_FALSE(l.support_violation);
  double direct = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    direct += std::log(bvpac_pdf(data.x1[i], data.x2[i], xi2));
  }
  CHECK(l.value == doctest::Approx(direct).epsilon(1e-12));
  CHECK(std::fabs(l.value - direct) < 1e-10);
}

TEST_CASE("loglik_ac3 equals loglik_ac7 on standard margins") {
  const Params3 a{2.0, 0.4, 0.5};
  const BivariateSample data = sample_bvpac(200, Params7::standard(a), 17);
  const LogLik l3 = loglik_ac3(data, a);
  const LogLik l7 = loglik_ac7(data, Params7::standard(a));
  CHECK(std::fabs(l3.value - l7.value) < 1e-10);
}

TEST_CASE("loglik is larger at the truth than at grossly wrong shapes") {
  const Params3 truth{2.0, 0.4, 0.5};
  const BivariateSample data = sample_bvpac(500, Params7::standard(truth), 5);
  const Params3 wrong{20.0, 4.0, 5.0};
  CHECK(loglik_ac3(data, truth).value > loglik_ac3(data, wrong).value);
}

TEST_CASE("loglik flags support violations as tagged -inf") {
  BivariateSample bad;
  bad.push_back(-1.0, 2.0);
  const LogLik l = loglik_ac3(bad, {1.0, 1.0, 1.0});
  CHECK(l.support_violation);
  CHECK(std::isinf(l.value));
  CHECK(l.value < 0.0);

  BivariateSample tie;
  tie.push_back(2.0, 2.0);
  const LogLik lt = loglik_ac3(tie, {1.0, 1.0, 1.0});
  CHECK(lt.support_violation);
}

TEST_CASE("standardize maps and round-trips") {
  BivariateSample data;
  data.push_back(3.0, 5.0);
  const BivariateSample z = standardize(data, 1.0, 1.0, 2.0, 2.0);
  CHECK(z.x1[0] == doctest::Approx(1.0));
  CHECK(z.x2[0] == doctest::Approx(2.0));

  const BivariateSample same = standardize(data, 0.0, 0.0, 1.0, 1.0);
  CHECK(same.x1[0] == 3.0);
  CHECK(same.x2[0] == 5.0);

  UniformStream u(7);
  BivariateSample rnd;
  for (int i = 0; i < 100; ++i) rnd.push_back(10.0 * u.next(), 10.0 * u.next());
  const BivariateSample fwd = standardize(rnd, 2.5, -1.0, 0.3, 1.7);
  for (std::size_t i = 0; i < rnd.size(); ++i) {
    CHECK(fwd.x1[i] * 0.3 + 2.5 == doctest::Approx(rnd.x1[i]).epsilon(1e-12));
    CHECK(fwd.x2[i] * 1.7 - 1.0 == doctest::Approx(rnd.x2[i]).epsilon(1e-12));
  }
}

TEST_CASE("partition classifies wedges and ties") {
  BivariateSample data;
  data.push_back(1.0, 2.0);
  data.push_back(2.0, 1.0);
  data.push_back(1.0, 1.0);

  const DataPartition std_margins = partition(data, 0.0, 0.0, 1.0, 1.0);
  CHECK(std_margins.n1() == 1);
  CHECK(std_margins.n2() == 1);
  CHECK(std_margins.n0() == 1);

  // Standardized rows become (1,1), (2,0.5), (1,0.5).
  const DataPartition scaled = partition(data, 0.0, 0.0, 1.0, 2.0);
  CHECK(scaled.n0() == 1);
  CHECK(scaled.n2() == 2);
  CHECK(scaled.n1() == 0);
}

TEST_CASE("partition of an absolutely continuous sample has no ties") {
  const Params7 p = Params7::standard({2.0, 0.4, 0.5});
  const BivariateSample data = sample_bvpac(1000, p, 33);
  CHECK(partition(data, 0.0, 0.0, 1.0, 1.0).n0() == 0);
}

TEST_CASE("partition is invariant under the matching affine change") {
  UniformStream u(55);
  BivariateSample data;
  for (int i = 0; i < 200; ++i) {
    data.push_back(5.0 * u.next() + 1.0, 4.0 * u.next() + 2.0);
  }
  const double mu1 = 1.0, mu2 = 2.0, s1 = 0.7, s2 = 1.9;
  const DataPartition direct = partition(data, mu1, mu2, s1, s2);
  const DataPartition via_std =
      partition(standardize(data, mu1, mu2, s1, s2), 0.0, 0.0, 1.0, 1.0);
  CHECK(direct.i0 == via_std.i0);
  CHECK(direct.i1 == via_std.i1);
  CHECK(direct.i2 == via_std.i2);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params7({0, 0, -1, 1, 1, 1, 1}).validate(),
                  invalid_parameter_error);
  CHECK_THROWS_AS(Params3({0, 1, 1}).validate(), invalid_parameter_error);
  CHECK(xi3.norm_const() > 1.0);
  CHECK(xi4.norm_const() > 1.0);
}
