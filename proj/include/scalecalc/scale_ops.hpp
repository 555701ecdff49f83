#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "scalecalc/paths.hpp"

namespace scalecalc {

/// Side of a quantum difference operator: sigma = +1 (forward) or -1 (backward).
enum class Side : int { Forward = +1, Backward = -1 };

inline double sigma(Side s) { return s == Side::Forward ? 1.0 : -1.0; }

/// nabla_+^eps f(t) = (f(t+eps) - f(t)) / eps, or nabla_-^eps f(t) = (f(t) - f(t-eps)) / eps,
/// on the sub-grid where the stencil fits.
SampledPath quantum_diff(const SampledPath& f, double eps, Side side);

/// Shifts the samples: (tau_s f)(t) = f(t + s); s must be a whole number of steps.
SampledPath translate(const SampledPath& f, double shift);

/// box_eps f / box t = (nabla_+ + nabla_-)/2 - i (nabla_+ - nabla_-)/2.
ComplexPath scale_derivative(const SampledPath& f, double eps);
/// Complex input: box C_r + i box C_m.
ComplexPath scale_derivative(const ComplexPath& f, double eps);

/// a_eps f(t) = |f(t+eps) + f(t-eps) - 2 f(t)| / eps.
SampledPath nondiff_defect(const SampledPath& f, double eps);

/// A per-point or global minimal resolution: a finite width or the INFINITE sentinel
/// (no admissible width brings the defect under the threshold).
class Resolution {
 public:
  static Resolution infinite() { return Resolution(); }
  static Resolution finite(double eps) { return Resolution(eps); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws ParameterError on the sentinel.
  double value() const;

  friend bool operator==(const Resolution&, const Resolution&) = default;

 private:
  Resolution() = default;
  explicit Resolution(double v) : value_(v) {}
  std::optional<double> value_;
};

struct MinimalResolution {
  double h = 0.0;
  double dt = 0.0;
  double eps_max = 0.0;
  /// Time of per_point[0]; points sit on the input grid.
  double t_first = 0.0;
  std::vector<Resolution> per_point;
  Resolution global = Resolution::infinite();

  /// True when the global resolution is finite and equal to one grid step, the
  /// sampled stand-in for a vanishing resolution.
  bool at_grid_floor() const;
};

struct MinimalResolutionOptions {
  /// Largest width searched; defaults to a quarter of the domain, rounded down to the grid.
  std::optional<double> eps_max;
};

/// Per point, the smallest admissible width eps in {dt, 2dt, .., eps_max} with a_eps f(t) < h.
/// Points closer than eps_max to either end are not reported.
MinimalResolution minimal_resolution(const SampledPath& f, double h, const MinimalResolutionOptions& options = {});

/// Upper bound (h / (2 |f|_alpha))^{1/(alpha-1)} on the resolution of an alpha-Hoelder function.
double holder_resolution_bound(double h, double holder_norm, double alpha);

struct HolderNormOptions {
  /// Grids up to this many points are scanned over all pairs.
  std::size_t exact_pair_cap = 4096;
  /// Above the cap: random pairs drawn per dyadic lag band.
  std::size_t pairs_per_band = 1u << 14;
  std::uint64_t seed = 0x5eedc0deULL;
};

/// max over sampled pairs of |f(x) - f(y)| / |x - y|^alpha; a lower bound of |f|_alpha.
double holder_norm_estimate(const SampledPath& f, double alpha, const HolderNormOptions& options = {});

}  // namespace scalecalc
