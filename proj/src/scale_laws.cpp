#include "scalecalc/scale_laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "scalecalc/kernels.hpp"
#include "scalecalc/ode.hpp"

namespace scalecalc {

namespace {

// Sorted strictly decreasing, duplicates removed.
std::vector<double> normalize_widths(std::vector<double> widths, double dt) {
  for (double w : widths) width_to_steps(w, dt);
  std::sort(widths.begin(), widths.end(), std::greater<>());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
  return widths;
}

}  // namespace

double graph_length(const SampledPath& f, double eps) {
  const std::size_t k = width_to_steps(eps, f.dt());
  if (k >= f.size()) throw ParameterError("width exceeds the domain");
  const auto v = f.values();
  double total = kernels::omp::segment_length_sum(v, k, eps);
  const std::size_t last = f.size() - 1;
  const std::size_t tail_start = (last / k) * k;
  if (tail_start < last) {
    const double dx = static_cast<double>(last - tail_start) * f.dt();
    const double dy = v[last] - v[tail_start];
    total += std::sqrt(dx * dx + dy * dy);
  }
  return total;
}

std::vector<ScaleLawPoint> scale_law_ode(ScaleLawForm form, double alpha, double initial, double log_eps0,
                                         double log_eps1, std::size_t steps) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("exponent must lie in (0, 1)");
  if (!std::isfinite(initial)) throw ParameterError("initial value is not finite");
  std::function<double(double)> rhs;
  switch (form) {
    case ScaleLawForm::Holder:
      if (initial == 0.0) throw SingularityError("holder form is singular at y = 0");
      if (initial < 0.0) throw ParameterError("holder form needs y > 0");
      rhs = [alpha](double y) { return (alpha - 1.0) * (y - 1.0 / y); };
      break;
    case ScaleLawForm::Inverse:
      rhs = [alpha](double x) { return (1.0 - alpha) * (x - x * x * x); };
      break;
    case ScaleLawForm::Linear:
      rhs = [alpha](double z) { return (1.0 - alpha) * z; };
      break;
  }
  const auto traj = rk4_integrate<double, 1>([&](double, const OdeState<double, 1>& y) { return OdeState<double, 1>{rhs(y[0])}; },
                                             log_eps0, log_eps1, OdeState<double, 1>{initial}, steps);
  std::vector<ScaleLawPoint> out;
  out.reserve(traj.size());
  for (const auto& [t, y] : traj) {
    if (!std::isfinite(y[0])) throw SingularityError("scale-law trajectory left the finite range");
    out.push_back({t, y[0]});
  }
  return out;
}

std::vector<double> default_fit_widths(const SampledPath& f) {
  return dyadic_widths(f.dt(), 4.0 * f.dt(), f.span_length() / 32.0);
}

ScaleLawFit fit_holder_exponent(const SampledPath& f, std::vector<double> eps_grid) {
  eps_grid = normalize_widths(std::move(eps_grid), f.dt());
  if (eps_grid.size() < 4) throw ParameterError("fit needs at least 4 widths");
  ScaleLawFit fit;
  fit.eps = eps_grid;
  fit.lengths.resize(eps_grid.size());
  std::vector<double> x(eps_grid.size()), y(eps_grid.size());
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    fit.lengths[i] = graph_length(f, eps_grid[i]);
    x[i] = std::log(eps_grid[i]);
    y[i] = std::log(fit.lengths[i]);
  }
  const LinearFit line = fit_line(x, y);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.residual = line.residual;
  fit.alpha_hat = std::clamp(1.0 + line.slope, 0.0, 1.0);
  return fit;
}

double length_envelope(double eps, double alpha, double k) {
  return std::pow(eps, alpha - 1.0) * std::sqrt(std::pow(eps, 2.0 * (1.0 - alpha)) + k * k);
}

HolderConstants fit_holder_constants(const SampledPath& f, double alpha, const std::vector<double>& eps_grid) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("exponent must lie in (0, 1)");
  if (eps_grid.empty()) throw ParameterError("width grid is empty");
  HolderConstants out{INFINITY, 0.0};
  const auto v = f.values();
  for (double eps : eps_grid) {
    const std::size_t k = width_to_steps(eps, f.dt());
    if (k >= f.size()) throw ParameterError("width exceeds the domain");
    const double scale = std::pow(eps, alpha);
    for (std::size_t i = 0; i + k < f.size(); i += k) {
      const double r = std::abs(v[i + k] - v[i]) / scale;
      out.c = std::min(out.c, r);
      out.C = std::max(out.C, r);
    }
  }
  return out;
}

std::vector<EnvelopeRow> envelope_table(const SampledPath& f, double alpha, const HolderConstants& k,
                                        const std::vector<double>& eps_grid) {
  std::vector<EnvelopeRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    rows.push_back({eps, length_envelope(eps, alpha, k.c), graph_length(f, eps), length_envelope(eps, alpha, k.C)});
  }
  return rows;
}

double WeakScaleExponents::e_minus(std::size_t i, double x) const {
  return (1.0 - gamma.at(i) - std::log(eps.at(i)) * gamma_prime.at(i)) * (x - x * x * x);
}

double WeakScaleExponents::e_plus(std::size_t i, double x) const {
  return (1.0 - beta.at(i) - std::log(eps.at(i)) * beta_prime.at(i)) * (x - x * x * x);
}

WeakScaleExponents weak_scale_exponents(const SampledPath& alpha_fn, std::vector<double> eps_grid) {
  eps_grid = normalize_widths(std::move(eps_grid), alpha_fn.dt());
  if (eps_grid.empty()) throw ParameterError("width grid is empty");
  for (double a : alpha_fn.values()) {
    if (!(a > 0.0 && a < 1.0)) throw ParameterError("exponent function must take values in (0, 1)");
  }
  const auto v = alpha_fn.values();
  const std::size_t n = v.size();
  WeakScaleExponents out;
  out.eps = eps_grid;
  for (double eps : eps_grid) {
    const std::size_t k = width_to_steps(eps, alpha_fn.dt());
    if (k >= n) throw ParameterError("width exceeds the domain");
    double lo = INFINITY, hi = -INFINITY;
    // Half-open windows [i k, (i+1) k) of samples.
    for (std::size_t start = 0; start + 1 < n; start += k) {
      const std::size_t stop = std::min(start + k, n - 1);
      double sum = 0.0;
      for (std::size_t j = start; j < stop; ++j) sum += v[j];
      const double mean = sum / static_cast<double>(stop - start);
      lo = std::min(lo, mean);
      hi = std::max(hi, mean);
    }
    out.gamma.push_back(lo);
    out.beta.push_back(hi);
  }
  auto derivative = [&](const std::vector<double>& g) {
    const std::size_t m = g.size();
    std::vector<double> d(m, 0.0);
    if (m < 2) return d;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t a = i == 0 ? 0 : i - 1;
      const std::size_t b = i + 1 == m ? m - 1 : i + 1;
      d[i] = (g[b] - g[a]) / (std::log(eps_grid[b]) - std::log(eps_grid[a]));
    }
    return d;
  };
  out.gamma_prime = derivative(out.gamma);
  out.beta_prime = derivative(out.beta);
  return out;
}

BoxDimension box_counting_dimension(const SampledPath& f, std::vector<double> box_sizes) {
  box_sizes = normalize_widths(std::move(box_sizes), f.dt());
  if (box_sizes.size() < 4) throw ParameterError("box counting needs at least 4 sizes");
  BoxDimension out;
  out.sizes = box_sizes;
  std::vector<double> x, y;
  for (double delta : box_sizes) {
    const std::size_t k = width_to_steps(delta, f.dt());
    if (k >= f.size()) throw ParameterError("box size exceeds the domain");
    const auto count = static_cast<double>(kernels::omp::box_count(f.values(), k, delta));
    out.counts.push_back(count);
    x.push_back(std::log(1.0 / delta));
    y.push_back(std::log(count));
  }
  const LinearFit line = fit_line(x, y);
  out.dimension = line.slope;
  out.residual = line.residual;
  return out;
}

}  // namespace scalecalc
