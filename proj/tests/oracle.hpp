#pragma once

// Reference values computed independently of the library: direct series sums,
// closed forms and plain difference quotients on callables.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "scalecalc/paths.hpp"

namespace oracle {

using Fn = std::function<double(double)>;

inline double tent(double t) {
  const double s = t - std::floor(t);
  return s <= 0.5 ? 2.0 * s : 2.0 - 2.0 * s;
}

inline double takagi(double alpha, int terms, double t) {
  double sum = 0.0;
  for (int n = 0; n < terms; ++n) sum += std::pow(2.0, -n * alpha) * tent(std::ldexp(t, n));
  return sum;
}

inline double forward(const Fn& f, double t, double eps) { return (f(t + eps) - f(t)) / eps; }
inline double backward(const Fn& f, double t, double eps) { return (f(t) - f(t - eps)) / eps; }

inline std::complex<double> scale(const Fn& f, double t, double eps) {
  const double p = forward(f, t, eps);
  const double m = backward(f, t, eps);
  return {0.5 * (p + m), -0.5 * (p - m)};
}

/// Dyadic grid of 2^log2n intervals on [a, a + span].
inline scalecalc::GridSpec dyadic_grid(double a, double span, int log2n) {
  return scalecalc::GridSpec::covering(a, span, std::size_t{1} << log2n);
}

/// Random polynomial coefficients of the given degree, uniform in [-1, 1].
inline std::vector<double> random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = u(rng);
  return c;
}

inline double horner(const std::vector<double>& c, double t) {
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
  return r;
}

template <class T>
double sup_abs(const scalecalc::BasicPath<T>& p) {
  double m = 0.0;
  for (const auto& v : p.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace oracle
