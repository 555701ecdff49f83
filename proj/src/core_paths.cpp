#include "scalecalc/core_paths.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scalecalc/scale_ops.hpp"

namespace scalecalc {

double tent(double t) {
  const double s = t - std::floor(t);
  return s <= 0.5 ? 2.0 * s : 2.0 - 2.0 * s;
}

double takagi_value(double alpha, int n_terms, double t) {
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    // t * 2^n is exact, so the tent argument carries no rounding.
    sum += std::exp2(-static_cast<double>(n) * alpha) * tent(std::ldexp(t, n));
  }
  return sum;
}

int takagi_terms_for(double alpha, double dt) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("Takagi exponent must lie in (0, 1)");
  if (!(dt > 0.0)) throw ParameterError("grid step must be positive");
  if (dt >= 1.0) return 1;
  int n = static_cast<int>(std::floor(std::log2(1.0 / dt) / alpha)) + 1;
  while (n > 1 && std::exp2(-static_cast<double>(n - 1) * alpha) < dt) --n;
  while (std::exp2(-static_cast<double>(n) * alpha) >= dt) ++n;
  return std::min(n, 1000);
}

SampledPath gen_takagi(double alpha, int n_terms, const GridSpec& grid) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("Takagi exponent must lie in (0, 1)");
  if (n_terms < 1) throw ParameterError("Takagi term count must be at least 1");
  if (grid.length == 0) throw ParameterError("grid is empty");
  std::vector<double> v(grid.length);
  for (std::size_t i = 0; i < grid.length; ++i) v[i] = takagi_value(alpha, n_terms, grid.time(i));
  return SampledPath(grid.t0, grid.dt, std::move(v));
}

// ---------------------------------------------------------------------------

void AffineSystem::validate() const {
  if (points.size() < 3) throw ParameterError("affine system needs N >= 2 maps (at least 3 points)");
  if (scaling.size() + 1 != points.size()) {
    throw ParameterError("affine system needs one vertical scaling per map");
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].first < points[i + 1].first)) {
      throw ParameterError("interpolation abscissae must be strictly increasing");
    }
  }
  for (const auto& [x, y] : points) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw ParameterError("interpolation point is not finite");
  }
  for (double d : scaling) {
    if (!std::isfinite(d)) throw ParameterError("vertical scaling is not finite");
    if (std::abs(d) >= 1.0) throw ContractionError("vertical scaling |d_i| must be < 1");
  }
  if (iterations < 0) throw ParameterError("iteration count must be non-negative");
}

std::vector<AffineMap> affine_maps(const AffineSystem& system) {
  system.validate();
  const auto [xa, ya] = system.points.front();
  const auto [xb, yb] = system.points.back();
  const double width = xb - xa;
  std::vector<AffineMap> maps;
  maps.reserve(system.scaling.size());
  for (std::size_t i = 0; i < system.scaling.size(); ++i) {
    const auto [x0, y0] = system.points[i];
    const auto [x1, y1] = system.points[i + 1];
    AffineMap m{};
    m.d = system.scaling[i];
    m.a = (x1 - x0) / width;
    m.e = x0 - m.a * xa;
    m.c = (y1 - y0 - m.d * (yb - ya)) / width;
    m.f = y0 - m.c * xa - m.d * ya;
    maps.push_back(m);
  }
  return maps;
}

double affine_iterate_value(const AffineSystem& system, const std::vector<AffineMap>& maps, int n, double x) {
  const auto [xa, ya] = system.points.front();
  const auto [xb, yb] = system.points.back();
  double acc = 0.0;
  double mult = 1.0;
  for (int level = n; level > 0; --level) {
    // Piece containing x: x_i <= x <= x_{i+1}.
    auto it = std::upper_bound(system.points.begin() + 1, system.points.end() - 1, x,
                               [](double v, const auto& p) { return v < p.first; });
    const std::size_t i = static_cast<std::size_t>(it - (system.points.begin() + 1));
    const AffineMap& m = maps[i];
    const double u = std::clamp((x - m.e) / m.a, xa, xb);
    acc += mult * (m.c * u + m.f);
    mult *= m.d;
    x = u;
  }
  const double base = ya + (yb - ya) * (x - xa) / (xb - xa);
  return acc + mult * base;
}

SampledPath gen_affine_ifs(const AffineSystem& system, const GridSpec& grid) {
  const std::vector<AffineMap> maps = affine_maps(system);
  if (grid.length == 0) throw ParameterError("grid is empty");
  const double xa = system.points.front().first;
  const double xb = system.points.back().first;
  const double tol = 1e-9 * std::max(1.0, xb - xa);
  if (grid.t0 < xa - tol || grid.time(grid.length - 1) > xb + tol) {
    throw ParameterError("grid leaves the interval of the affine system");
  }
  std::vector<double> v(grid.length);
  for (std::size_t i = 0; i < grid.length; ++i) {
    const double x = std::clamp(grid.time(i), xa, xb);
    v[i] = affine_iterate_value(system, maps, system.iterations, x);
  }
  return SampledPath(grid.t0, grid.dt, std::move(v));
}

// ---------------------------------------------------------------------------

namespace {

// Closed Newton-Cotes weights on `m` unit intervals, exact for cubics when m >= 2.
std::vector<double> newton_cotes(std::size_t m) {
  std::vector<double> w(m + 1, 0.0);
  if (m == 1) {
    w[0] = w[1] = 0.5;
    return w;
  }
  auto simpson = [&](std::size_t from, std::size_t intervals) {
    for (std::size_t j = 0; j < intervals; j += 2) {
      w[from + j] += 1.0 / 3.0;
      w[from + j + 1] += 4.0 / 3.0;
      w[from + j + 2] += 1.0 / 3.0;
    }
  };
  auto three_eighths = [&](std::size_t from) {
    w[from] += 3.0 / 8.0;
    w[from + 1] += 9.0 / 8.0;
    w[from + 2] += 9.0 / 8.0;
    w[from + 3] += 3.0 / 8.0;
  };
  if (m % 2 == 0) {
    simpson(0, m);
  } else {
    simpson(0, m - 3);
    three_eighths(m - 3);
  }
  return w;
}

}  // namespace

DiscreteKernel discretize(const KernelSpec& kernel, double dt) {
  const std::size_t k = width_to_steps(kernel.width, dt);
  const auto ks = static_cast<std::ptrdiff_t>(k);
  DiscreteKernel out;
  switch (kernel.kind) {
    case KernelKind::BoxCentral:
      out.lo = -ks;
      out.hi = ks;
      out.weights = newton_cotes(2 * k);
      break;
    case KernelKind::BoxForward:
      out.lo = 0;
      out.hi = ks;
      out.weights = newton_cotes(k);
      break;
    case KernelKind::BoxBackward:
      out.lo = -ks;
      out.hi = 0;
      out.weights = newton_cotes(k);
      break;
    case KernelKind::Gaussian: {
      out.lo = -ks;
      out.hi = ks;
      const double sigma = kernel.width / 3.0;
      out.weights.resize(2 * k + 1);
      for (std::ptrdiff_t j = -ks; j <= ks; ++j) {
        const double s = static_cast<double>(j) * dt;
        out.weights[static_cast<std::size_t>(j + ks)] = std::exp(-s * s / (2.0 * sigma * sigma));
      }
      break;
    }
  }
  const double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  double scale = 1.0 / total;
  const bool one_sided = kernel.kind == KernelKind::BoxForward || kernel.kind == KernelKind::BoxBackward;
  if (kernel.normalization == Normalization::HalfOneSided && one_sided) scale *= 0.5;
  for (double& w : out.weights) w *= scale;
  return out;
}

SampledPath smooth_representation(const SampledPath& f, const KernelSpec& kernel) {
  const DiscreteKernel dk = discretize(kernel, f.dt());
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  const std::ptrdiff_t first = -dk.lo;
  const std::ptrdiff_t last = n - 1 - dk.hi;
  if (last < first) throw ParameterError("kernel width exceeds the domain");
  std::vector<double> out(static_cast<std::size_t>(last - first + 1));
  const auto v = f.values();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = first; i <= last; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < dk.weights.size(); ++j) {
      s += dk.weights[j] * v[static_cast<std::size_t>(i + dk.lo + static_cast<std::ptrdiff_t>(j))];
    }
    out[static_cast<std::size_t>(i - first)] = s;
  }
  return SampledPath(f.time(static_cast<std::size_t>(first)), f.dt(), std::move(out));
}

// ---------------------------------------------------------------------------

SampledPath gen_principal_schrodinger(const PrincipalPathSpec& spec, const GridSpec& grid) {
  if (!(spec.hbar_over_m > 0.0)) throw ParameterError("hbar/m must be positive");
  if (spec.sign != 1 && spec.sign != -1) throw ParameterError("sign must be +1 or -1");
  if (grid.length == 0) throw ParameterError("grid is empty");
  const std::size_t k = width_to_steps(spec.eps, grid.dt);
  const int n_terms = spec.n_terms > 0 ? spec.n_terms : takagi_terms_for(0.5, 1.0 / static_cast<double>(k));
  const double slope = static_cast<double>(spec.sign) * std::sqrt(spec.hbar_over_m);
  const double base_phase = grid.t0 / spec.eps - std::floor(grid.t0 / spec.eps);

  // Perturbation values over one period, indexed by i mod k.
  std::vector<double> period(k, 0.0);
  if (spec.perturbation_amplitude != 0.0) {
    for (std::size_t r = 0; r < k; ++r) {
      double phase = base_phase + static_cast<double>(r) / static_cast<double>(k);
      if (phase >= 1.0) phase -= 1.0;
      period[r] = spec.perturbation_amplitude * takagi_value(0.5, n_terms, phase);
    }
  }
  std::vector<double> v(grid.length);
  for (std::size_t i = 0; i < grid.length; ++i) {
    v[i] = slope * (grid.time(i) - spec.c - 0.5 * spec.eps) + period[i % k];
  }
  return SampledPath(grid.t0, grid.dt, std::move(v));
}

// ---------------------------------------------------------------------------

QuantumRepresentation quantum_representation(const SampledPath& f, double eps, double h) {
  width_to_steps(eps, f.dt());
  const MinimalResolution res = minimal_resolution(f, h);
  const bool resolved = res.at_grid_floor() || (!res.global.is_infinite() && eps > res.global.value());
  if (resolved) {
    return SingleGraph{smooth_representation(f, KernelSpec{KernelKind::BoxCentral, eps, Normalization::Conventional})};
  }
  return GraphPair{
      smooth_representation(f, KernelSpec{KernelKind::BoxForward, eps, Normalization::Conventional}),
      smooth_representation(f, KernelSpec{KernelKind::BoxBackward, eps, Normalization::Conventional})};
}

}  // namespace scalecalc
