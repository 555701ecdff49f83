#pragma once

#include <span>
#include <vector>

namespace scalecalc {

/// Ordinary least-squares line y = slope * x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Root-mean-square residual.
  double residual = 0.0;
};

/// Throws FitError unless x holds at least two distinct values.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Widths dt * 2^j inside [lo, hi], largest first.
std::vector<double> dyadic_widths(double dt, double lo, double hi);

}  // namespace scalecalc
