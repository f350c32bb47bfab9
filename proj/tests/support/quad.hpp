#pragma once

// Quadrature helpers for test oracles, independent of the library under
// test. Thin wrappers over Boost.Math double-exponential rules.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace quad {

template <class F>
double finite(F f, double a, double b, double tol = 1e-9) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, tol);
}

// Integral over [a, infinity).
template <class F>
double upper(F f, double a, double tol = 1e-9) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([&](double t) { return f(a + t); }, tol);
}

}  // namespace quad
