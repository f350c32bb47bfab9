#pragma once

#include <cstddef>
#include <vector>

namespace bvp {

// Default relative tie tolerance for classifying a standardized pair as
// diagonal: |z1 - z2| <= tol * max(1, |z1|, |z2|).
inline constexpr double kTieTolerance = 1e-9;

// Shape parameters of the standard-margin family: common shock alpha0 plus
// one shape per margin.
struct Params3 {
  double alpha0 = 1.0;
  double alpha1 = 1.0;
  double alpha2 = 1.0;

  // Grouped so that swapping alpha1 and alpha2 gives the identical float.
  double sum() const { return alpha0 + (alpha1 + alpha2); }
  void validate() const;  // throws invalid_parameter_error
};

// Full parameter vector: per-margin location and scale plus the three shapes.
struct Params7 {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double alpha0 = 1.0;
  double alpha1 = 1.0;
  double alpha2 = 1.0;

  double alpha_sum() const { return alpha0 + alpha1 + alpha2; }
  // Normalizing constant of the absolutely continuous part,
  // c = (alpha0+alpha1+alpha2)/(alpha1+alpha2) > 1.
  double norm_const() const { return alpha_sum() / (alpha1 + alpha2); }
  Params3 alphas() const { return {alpha0, alpha1, alpha2}; }
  static Params7 standard(const Params3& a) {
    return {0.0, 0.0, 1.0, 1.0, a.alpha0, a.alpha1, a.alpha2};
  }
  void validate() const;  // throws invalid_parameter_error
};

// Paired observations stored as two parallel columns, row order preserved.
struct BivariateSample {
  std::vector<double> x1;
  std::vector<double> x2;

  std::size_t size() const { return x1.size(); }
  bool empty() const { return x1.empty(); }
  void push_back(double a, double b) {
    x1.push_back(a);
    x2.push_back(b);
  }
  void reserve(std::size_t n) {
    x1.reserve(n);
    x2.reserve(n);
  }
};

// Row indices split by the sign of z1 - z2 in standardized coordinates.
// Ties within the relative tolerance land in i0.
struct DataPartition {
  std::vector<std::size_t> i0;
  std::vector<std::size_t> i1;
  std::vector<std::size_t> i2;
  double tie_tolerance = kTieTolerance;

  std::size_t n0() const { return i0.size(); }
  std::size_t n1() const { return i1.size(); }
  std::size_t n2() const { return i2.size(); }
};

}  // namespace bvp
