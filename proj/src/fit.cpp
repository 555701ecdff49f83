#include "scalecalc/fit.hpp"

#include <algorithm>
#include <cmath>

#include "scalecalc/error.hpp"

namespace scalecalc {

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("fit needs matching x and y");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (x.size() < 2 || *lo == *hi) throw FitError("fit needs at least two distinct abscissae");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

std::vector<double> dyadic_widths(double dt, double lo, double hi) {
  if (!(dt > 0.0)) throw ParameterError("grid step must be positive");
  std::vector<double> out;
  for (int j = 0; j < 60; ++j) {
    const double w = std::ldexp(dt, j);
    if (w > hi * (1.0 + 1e-12)) break;
    if (w >= lo * (1.0 - 1e-12)) out.push_back(w);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace scalecalc
