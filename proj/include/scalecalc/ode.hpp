#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "scalecalc/error.hpp"

namespace scalecalc {

template <class T, std::size_t N>
using OdeState = std::array<T, N>;

/// One classical fourth-order Runge-Kutta step of y' = rhs(t, y).
template <class T, std::size_t N, class Rhs>
OdeState<T, N> rk4_step(Rhs&& rhs, double t, const OdeState<T, N>& y, double h) {
  auto axpy = [](const OdeState<T, N>& a, double s, const OdeState<T, N>& b) {
    OdeState<T, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  const OdeState<T, N> k1 = rhs(t, y);
  const OdeState<T, N> k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const OdeState<T, N> k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const OdeState<T, N> k4 = rhs(t + h, axpy(y, h, k3));
  OdeState<T, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/// Trajectory of `steps` fixed RK4 steps from (t0, y0) to t1, including both ends.
template <class T, std::size_t N, class Rhs>
std::vector<std::pair<double, OdeState<T, N>>> rk4_integrate(Rhs&& rhs, double t0, double t1,
                                                             const OdeState<T, N>& y0, std::size_t steps) {
  if (steps == 0) throw ParameterError("integrator needs at least one step");
  const double h = (t1 - t0) / static_cast<double>(steps);
  std::vector<std::pair<double, OdeState<T, N>>> out;
  out.reserve(steps + 1);
  out.emplace_back(t0, y0);
  OdeState<T, N> y = y0;
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = t0 + static_cast<double>(s) * h;
    y = rk4_step<T, N>(rhs, t, y, h);
    out.emplace_back(s + 1 == steps ? t1 : t0 + static_cast<double>(s + 1) * h, y);
  }
  return out;
}

}  // namespace scalecalc
