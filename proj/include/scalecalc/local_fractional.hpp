#pragma once

#include <cstddef>
#include <vector>

#include "scalecalc/paths.hpp"
#include "scalecalc/scale_ops.hpp"

namespace scalecalc {

enum class FracFlag { Converged, Divergent, Oscillatory };

const char* to_string(FracFlag flag);

struct FracOptions {
  /// Richardson extrapolation of the quotient tail; off reports the finest quotient.
  bool extrapolate = true;
  /// Relative agreement of the last three extrapolants required for a limit.
  double tol = 1e-3;
  /// |q| growing over the last three levels and reaching this multiple of the
  /// coarsest quotient marks divergence.
  double divergence_factor = 10.0;
  /// Upper bound on the number of dyadic levels, counted from the finest step.
  std::size_t max_levels = 24;
};

struct FracEstimate {
  double t0 = 0.0;
  double alpha = 0.0;
  Side side = Side::Forward;
  /// Steps h, strictly decreasing to dt, and the matching quotients.
  std::vector<double> h;
  std::vector<double> quotients;
  std::vector<double> extrapolants;
  FracFlag flag = FracFlag::Oscillatory;
  /// Extrapolated limit when converged, otherwise the finest quotient.
  double value = 0.0;
};

/// Right: (f(t0+h) - f(t0)) / h^alpha. Left: (f(t0) - f(t0-h)) / h^alpha.
/// t0 must be an interior grid point.
FracEstimate local_frac_deriv(const SampledPath& f, double t0, double alpha, Side side, const FracOptions& options = {});

enum class FracCombination {
  /// (d+ + d-)/2 + i (d+ - d-)/2
  HalfDifference,
  /// (d+ + d-)/2 + i (d+ + d-)/2
  Literal,
};

struct ComplexFrac {
  Complex value;
  /// Divergent if either side is, else Oscillatory if either side is.
  FracFlag flag = FracFlag::Converged;
  FracEstimate right;
  FracEstimate left;
};

ComplexFrac complex_local_frac(const SampledPath& f, double t0, double alpha, const FracOptions& options = {},
                               FracCombination combination = FracCombination::HalfDifference);

struct SpectrumRow {
  double t;
  Complex value;
  FracFlag flag;
};

struct SpectrumScan {
  std::vector<SpectrumRow> rows;
  double fraction_zero = 0.0;
  double fraction_divergent = 0.0;
  double fraction_oscillatory = 0.0;
  double fraction_nonzero = 0.0;
};

/// complex_local_frac at each point; a converged estimate with |value| <= zero_tol counts as zero.
SpectrumScan spectrum_scan(const SampledPath& f, double alpha, const std::vector<double>& points,
                           const FracOptions& options = {}, double zero_tol = 1e-3);

}  // namespace scalecalc
