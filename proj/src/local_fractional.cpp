#include "scalecalc/local_fractional.hpp"

#include <algorithm>
#include <cmath>

namespace scalecalc {

const char* to_string(FracFlag flag) {
  switch (flag) {
    case FracFlag::Converged: return "converged";
    case FracFlag::Divergent: return "divergent";
    case FracFlag::Oscillatory: return "oscillatory";
  }
  return "?";
}

namespace {

std::size_t grid_index(const SampledPath& f, double t) {
  const double r = (t - f.t0()) / f.dt();
  const double k = std::round(r);
  if (std::abs(r - k) > 1e-6) throw GridError("point is not on the sample grid");
  if (k <= 0.0 || k >= static_cast<double>(f.size() - 1)) throw ParameterError("point must be interior");
  return static_cast<std::size_t>(k);
}

bool agree(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

FracEstimate local_frac_deriv(const SampledPath& f, double t0, double alpha, Side side, const FracOptions& options) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("order must lie in (0, 1)");
  const std::size_t c = grid_index(f, t0);
  const std::size_t room = side == Side::Forward ? f.size() - 1 - c : c;

  FracEstimate est;
  est.t0 = f.time(c);
  est.alpha = alpha;
  est.side = side;
  std::size_t levels = 0;
  while (levels < options.max_levels && (std::size_t{1} << levels) <= room) ++levels;
  for (std::size_t j = levels; j-- > 0;) {
    const std::size_t k = std::size_t{1} << j;
    const double h = static_cast<double>(k) * f.dt();
    const double diff = side == Side::Forward ? f[c + k] - f[c] : f[c] - f[c - k];
    est.h.push_back(h);
    est.quotients.push_back(diff / std::pow(h, alpha));
  }

  const auto& q = est.quotients;
  const std::size_t m = q.size();
  if (options.extrapolate) {
    // Two Richardson levels removing the h^{1-alpha} and h^{2-alpha} terms of a
    // differentiable f; a pure power (t - t0)^alpha passes through unchanged.
    const double r1 = std::exp2(-(1.0 - alpha));
    const double r2 = std::exp2(-(2.0 - alpha));
    std::vector<double> level1;
    for (std::size_t i = 0; i + 1 < m; ++i) level1.push_back((q[i + 1] - r1 * q[i]) / (1.0 - r1));
    for (std::size_t i = 0; i + 1 < level1.size(); ++i) {
      est.extrapolants.push_back((level1[i + 1] - r2 * level1[i]) / (1.0 - r2));
    }
  } else {
    est.extrapolants = q;
  }

  const auto& a = est.extrapolants;
  const std::size_t ma = a.size();
  est.value = m > 0 ? q.back() : 0.0;
  if (ma >= 3 && agree(a[ma - 3], a[ma - 1], options.tol) && agree(a[ma - 2], a[ma - 1], options.tol)) {
    est.flag = FracFlag::Converged;
    est.value = a.back();
  } else if (m >= 3 && std::abs(q[m - 1]) >= std::abs(q[m - 2]) && std::abs(q[m - 2]) >= std::abs(q[m - 3]) &&
             std::abs(q[m - 1]) >= options.divergence_factor * std::abs(q[0])) {
    est.flag = FracFlag::Divergent;
  } else {
    est.flag = FracFlag::Oscillatory;
  }
  return est;
}

ComplexFrac complex_local_frac(const SampledPath& f, double t0, double alpha, const FracOptions& options,
                               FracCombination combination) {
  ComplexFrac out;
  out.right = local_frac_deriv(f, t0, alpha, Side::Forward, options);
  out.left = local_frac_deriv(f, t0, alpha, Side::Backward, options);
  const double dp = out.right.value;
  const double dm = out.left.value;
  const double im = combination == FracCombination::HalfDifference ? 0.5 * (dp - dm) : 0.5 * (dp + dm);
  out.value = Complex(0.5 * (dp + dm), im);
  if (out.right.flag == FracFlag::Divergent || out.left.flag == FracFlag::Divergent) {
    out.flag = FracFlag::Divergent;
  } else if (out.right.flag == FracFlag::Oscillatory || out.left.flag == FracFlag::Oscillatory) {
    out.flag = FracFlag::Oscillatory;
  }
  return out;
}

SpectrumScan spectrum_scan(const SampledPath& f, double alpha, const std::vector<double>& points,
                           const FracOptions& options, double zero_tol) {
  SpectrumScan scan;
  scan.rows.resize(points.size());
  for (double t : points) grid_index(f, t);
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const ComplexFrac d = complex_local_frac(f, points[idx], alpha, options);
    scan.rows[idx] = {d.right.t0, d.value, d.flag};
  }
  if (points.empty()) return scan;
  std::size_t zero = 0, divergent = 0, oscillatory = 0, nonzero = 0;
  for (const auto& row : scan.rows) {
    if (row.flag == FracFlag::Divergent) {
      ++divergent;
    } else if (row.flag == FracFlag::Oscillatory) {
      ++oscillatory;
    } else if (std::abs(row.value) <= zero_tol) {
      ++zero;
    } else {
      ++nonzero;
    }
  }
  const double total = static_cast<double>(scan.rows.size());
  scan.fraction_zero = zero / total;
  scan.fraction_divergent = divergent / total;
  scan.fraction_oscillatory = oscillatory / total;
  scan.fraction_nonzero = nonzero / total;
  return scan;
}

}  // namespace scalecalc
