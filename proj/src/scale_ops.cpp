#include "scalecalc/scale_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "scalecalc/kernels.hpp"

namespace scalecalc {

namespace {

std::size_t stencil_steps(const SampledPath& f, double eps, std::size_t depth) {
  const std::size_t k = width_to_steps(eps, f.dt());
  if (depth * k >= f.size()) throw GridError("stencil does not fit the path");
  return k;
}

}  // namespace

SampledPath quantum_diff(const SampledPath& f, double eps, Side side) {
  const std::size_t k = stencil_steps(f, eps, 1);
  std::vector<double> out(f.size() - k);
  kernels::omp::forward_difference(f.values(), k, eps, out);
  // The backward quotient at t is the forward quotient at t - eps.
  const double start = side == Side::Forward ? f.t0() : f.time(k);
  return SampledPath(start, f.dt(), std::move(out));
}

SampledPath translate(const SampledPath& f, double shift) {
  const std::size_t k = width_to_steps(std::abs(shift), f.dt());
  if (k == 0) return f;
  if (k >= f.size()) throw GridError("translation leaves the path");
  const auto v = f.values();
  if (shift > 0) {
    // (tau_s f)(t) = f(t + s) on t in [t0, t_end - s].
    return SampledPath(f.t0(), f.dt(), std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(k), v.end()));
  }
  return SampledPath(f.time(k), f.dt(), std::vector<double>(v.begin(), v.end() - static_cast<std::ptrdiff_t>(k)));
}

ComplexPath scale_derivative(const SampledPath& f, double eps) {
  const std::size_t k = stencil_steps(f, eps, 2);
  std::vector<Complex> out(f.size() - 2 * k);
  kernels::omp::scale_difference(f.values(), k, eps, out);
  return ComplexPath(f.time(k), f.dt(), std::move(out));
}

ComplexPath scale_derivative(const ComplexPath& f, double eps) {
  const std::size_t k = width_to_steps(eps, f.dt());
  if (2 * k >= f.size()) throw GridError("stencil does not fit the path");
  std::vector<Complex> out(f.size() - 2 * k);
  kernels::omp::scale_difference(f.values(), k, eps, out);
  return ComplexPath(f.time(k), f.dt(), std::move(out));
}

SampledPath nondiff_defect(const SampledPath& f, double eps) {
  const std::size_t k = stencil_steps(f, eps, 2);
  std::vector<double> out(f.size() - 2 * k);
  kernels::omp::second_difference_defect(f.values(), k, eps, out);
  return SampledPath(f.time(k), f.dt(), std::move(out));
}

double Resolution::value() const {
  if (!value_) throw ParameterError("resolution is infinite");
  return *value_;
}

bool MinimalResolution::at_grid_floor() const {
  return !global.is_infinite() && global.value() <= dt * (1.0 + 1e-12);
}

MinimalResolution minimal_resolution(const SampledPath& f, double h, const MinimalResolutionOptions& options) {
  if (!(h > 0.0)) throw ParameterError("threshold h must be positive");
  const std::size_t n = f.size();
  std::size_t kmax = (n - 1) / 4;
  if (options.eps_max) {
    if (!(*options.eps_max > 0.0)) throw ParameterError("eps_max must be positive");
    kmax = static_cast<std::size_t>(std::floor(*options.eps_max / f.dt() + 1e-9));
  }
  if (kmax < 1 || 2 * kmax >= n) throw GridError("path too short for the requested eps_max");

  std::vector<std::size_t> steps(n - 2 * kmax);
  kernels::omp::minimal_resolution_steps(f.values(), f.dt(), kmax, h, steps);

  MinimalResolution res;
  res.h = h;
  res.dt = f.dt();
  res.eps_max = static_cast<double>(kmax) * f.dt();
  res.t_first = f.time(kmax);
  res.per_point.reserve(steps.size());
  std::size_t worst = 0;
  bool any_infinite = false;
  for (std::size_t s : steps) {
    if (s == 0) {
      res.per_point.push_back(Resolution::infinite());
      any_infinite = true;
    } else {
      res.per_point.push_back(Resolution::finite(static_cast<double>(s) * f.dt()));
      worst = std::max(worst, s);
    }
  }
  res.global = any_infinite ? Resolution::infinite() : Resolution::finite(static_cast<double>(worst) * f.dt());
  return res;
}

double holder_resolution_bound(double h, double holder_norm, double alpha) {
  if (!(h > 0.0)) throw ParameterError("threshold h must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("Hoelder exponent must lie in (0, 1)");
  if (!(holder_norm > 0.0)) throw ParameterError("Hoelder norm must be positive");
  return std::pow(h / (2.0 * holder_norm), 1.0 / (alpha - 1.0));
}

double holder_norm_estimate(const SampledPath& f, double alpha, const HolderNormOptions& options) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("Hoelder exponent must lie in (0, 1)");
  const std::size_t n = f.size();
  if (n < 2) throw ParameterError("Hoelder norm needs at least two samples");
  if (n <= options.exact_pair_cap) return kernels::omp::holder_ratio_all_pairs(f.values(), f.dt(), alpha);
  if (n > (std::size_t{1} << 32)) throw ParameterError("path too long for pair sampling");

  // Stratified sampling: lags drawn uniformly inside each dyadic band [2^b, 2^{b+1}).
  std::mt19937_64 rng(options.seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const std::size_t max_lag = n - 1;
  for (std::size_t lo = 1; lo <= max_lag; lo *= 2) {
    const std::size_t hi = std::min(2 * lo - 1, max_lag);
    std::uniform_int_distribution<std::size_t> lag_dist(lo, hi);
    pairs.emplace_back(0u, static_cast<std::uint32_t>(hi));
    for (std::size_t p = 0; p < options.pairs_per_band; ++p) {
      const std::size_t lag = lag_dist(rng);
      std::uniform_int_distribution<std::size_t> start_dist(0, n - 1 - lag);
      const std::size_t i = start_dist(rng);
      pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + lag));
    }
  }
  return kernels::omp::holder_ratio_pairs(f.values(), f.dt(), alpha, pairs);
}

}  // namespace scalecalc
