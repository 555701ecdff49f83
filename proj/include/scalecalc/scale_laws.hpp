#pragma once

#include <cstddef>
#include <vector>

#include "scalecalc/fit.hpp"
#include "scalecalc/paths.hpp"

namespace scalecalc {

/// Polygonal length of the graph with steps of width eps from t0: the full steps
/// plus one tail segment to the right endpoint when eps does not divide the domain.
double graph_length(const SampledPath& f, double eps);

enum class ScaleLawForm {
  Holder,   // dy/dtau = (alpha - 1)(y - 1/y)
  Inverse,  // dx/dtau = (1 - alpha)(x - x^3), x = 1/y
  Linear,   // dz/dtau = (1 - alpha) z
};

struct ScaleLawPoint {
  double log_eps;
  double value;
};

/// Fixed-step RK4 integration in tau = ln eps from log_eps0 to log_eps1.
/// Holder form: y0 = 0 is a singularity error, y0 < 0 a parameter error.
std::vector<ScaleLawPoint> scale_law_ode(ScaleLawForm form, double alpha, double initial, double log_eps0,
                                         double log_eps1, std::size_t steps);

struct ScaleLawFit {
  double alpha_hat = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  /// Widths, strictly decreasing, and the matching lengths.
  std::vector<double> eps;
  std::vector<double> lengths;
};

/// Dyadic widths from a 32nd of the domain down to 4 dt.
std::vector<double> default_fit_widths(const SampledPath& f);

/// Least squares of log L_eps against log eps; alpha_hat = 1 + slope clamped to [0, 1].
/// Needs at least 4 admissible widths.
ScaleLawFit fit_holder_exponent(const SampledPath& f, std::vector<double> eps_grid);

/// l_eps or L_eps = eps^{alpha-1} sqrt(eps^{2(1-alpha)} + k^2) for constant k = c or C.
double length_envelope(double eps, double alpha, double k);

struct HolderConstants {
  double c = 0.0;
  double C = 0.0;
};

/// Smallest and largest step increment |f(t+eps) - f(t)| / eps^alpha over the
/// step grids of all listed widths, anchored at t0.
HolderConstants fit_holder_constants(const SampledPath& f, double alpha, const std::vector<double>& eps_grid);

struct EnvelopeRow {
  double eps;
  double lower;
  double length;
  double upper;
};

/// Lower envelope, measured length and upper envelope per width.
std::vector<EnvelopeRow> envelope_table(const SampledPath& f, double alpha, const HolderConstants& k,
                                        const std::vector<double>& eps_grid);

struct WeakScaleExponents {
  std::vector<double> eps;
  std::vector<double> gamma;
  std::vector<double> beta;
  /// Derivatives with respect to ln eps (central differences, one-sided at the ends).
  std::vector<double> gamma_prime;
  std::vector<double> beta_prime;

  /// E_-(x, ln eps_i) = (1 - gamma - ln(eps_i) gamma') (x - x^3).
  double e_minus(std::size_t i, double x) const;
  /// E_+(x, ln eps_i) = (1 - beta - ln(eps_i) beta') (x - x^3).
  double e_plus(std::size_t i, double x) const;
};

/// Per width, min and max of the window means of alpha over [t0 + i eps, t0 + (i+1) eps).
WeakScaleExponents weak_scale_exponents(const SampledPath& alpha_fn, std::vector<double> eps_grid);

struct BoxDimension {
  double dimension = 0.0;
  double residual = 0.0;
  std::vector<double> sizes;
  std::vector<double> counts;
};

/// Slope of log N(delta) against log(1/delta), N counting delta-boxes met by the graph.
BoxDimension box_counting_dimension(const SampledPath& f, std::vector<double> box_sizes);

}  // namespace scalecalc
