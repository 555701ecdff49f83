#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scalecalc/paths.hpp"

namespace scalecalc {

/// f(x, t) with explicit partial derivatives: d/dt and d^j/dx^j for j = 1..order.
struct SmoothField {
  using Rule = std::function<double(double x, double t)>;

  std::string name;
  int order = 0;
  Rule value;
  Rule d_t;
  /// d_x[j - 1] is the j-th x-derivative.
  std::vector<Rule> d_x;

  static SmoothField monomial(int power, int order);  // x^power
  static SmoothField time();                          // t
  static SmoothField sine(int order);                 // sin x
  static SmoothField exp_x_sin_t(int order);          // exp(x) sin(t)

  /// Throws ParameterError when the rules are inconsistent: each derivative is
  /// compared with a central difference of the rule below it at random points
  /// (relative tolerance 1e-5).
  void validate(std::uint64_t seed = 1, int points = 16) const;
};

/// a_{eps,j}(t) = (1/2)[(D+)^j - (-1)^j (D-)^j] - (i/2)[(D+)^j + (-1)^j (D-)^j],
/// D+- the forward and backward quotients of X, on the centres where both exist.
ComplexPath a_coeffs(const SampledPath& X, double eps, int j);

/// d_t f + sum_{j=1}^{n} (1/j!) d_x^j f eps^{j-1} a_{eps,j}, evaluated along (X(t), t).
ComplexPath ito_expand(const SmoothField& field, const SampledPath& X, double eps, int n);

/// Scale derivative of t -> f(X(t), t).
ComplexPath composed_scale_derivative(const SmoothField& field, const SampledPath& X, double eps);

struct ItoComparison {
  ComplexPath direct;
  ComplexPath expansion;
  /// max |direct - expansion|
  double max_error = 0.0;
  /// max over points of |direct - expansion| minus a first-order floating-point
  /// error bound of both evaluations, floored at 0.
  double max_excess = 0.0;
};

ItoComparison compare_ito(const SmoothField& field, const SampledPath& X, double eps, int n);

struct ItoSweepRow {
  double eps;
  double max_error;
  double max_excess;
  /// max_excess / eps^{1/2}
  double ratio;
};

std::vector<ItoSweepRow> ito_sweep(const SmoothField& field, const SampledPath& X, const std::vector<double>& eps_grid,
                                   int n);

/// True when the ratio column does not increase as eps decreases along the rows
/// (rows sorted by decreasing eps), allowing a relative slack.
bool ratio_non_increasing(const std::vector<ItoSweepRow>& rows, double slack = 0.0);

}  // namespace scalecalc
