#include "scalecalc/expansion.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <random>

#include "scalecalc/scale_ops.hpp"

namespace scalecalc {

namespace {

double ipow(double x, int j) {
  double r = x;
  for (int i = 1; i < j; ++i) r *= x;
  return r;
}

double factorial(int j) {
  double r = 1.0;
  for (int i = 2; i <= j; ++i) r *= i;
  return r;
}

std::size_t centre_steps(const SampledPath& X, double eps) {
  const std::size_t k = width_to_steps(eps, X.dt());
  if (2 * k >= X.size()) throw GridError("stencil does not fit the path");
  return k;
}

}  // namespace

SmoothField SmoothField::monomial(int power, int order) {
  if (power < 0 || order < 1) throw ParameterError("monomial needs power >= 0 and order >= 1");
  SmoothField f;
  f.name = "x^" + std::to_string(power);
  f.order = order;
  f.value = [power](double x, double) { return power == 0 ? 1.0 : ipow(x, power); };
  f.d_t = [](double, double) { return 0.0; };
  for (int j = 1; j <= order; ++j) {
    if (j > power) {
      f.d_x.push_back([](double, double) { return 0.0; });
      continue;
    }
    double coeff = 1.0;
    for (int i = 0; i < j; ++i) coeff *= power - i;
    const int rest = power - j;
    f.d_x.push_back([coeff, rest](double x, double) { return rest == 0 ? coeff : coeff * ipow(x, rest); });
  }
  return f;
}

SmoothField SmoothField::time() {
  SmoothField f;
  f.name = "t";
  f.order = 8;
  f.value = [](double, double t) { return t; };
  f.d_t = [](double, double) { return 1.0; };
  f.d_x.assign(8, [](double, double) { return 0.0; });
  return f;
}

SmoothField SmoothField::sine(int order) {
  if (order < 1) throw ParameterError("field order must be at least 1");
  SmoothField f;
  f.name = "sin(x)";
  f.order = order;
  f.value = [](double x, double) { return std::sin(x); };
  f.d_t = [](double, double) { return 0.0; };
  for (int j = 1; j <= order; ++j) {
    switch (j % 4) {
      case 1: f.d_x.push_back([](double x, double) { return std::cos(x); }); break;
      case 2: f.d_x.push_back([](double x, double) { return -std::sin(x); }); break;
      case 3: f.d_x.push_back([](double x, double) { return -std::cos(x); }); break;
      default: f.d_x.push_back([](double x, double) { return std::sin(x); }); break;
    }
  }
  return f;
}

SmoothField SmoothField::exp_x_sin_t(int order) {
  if (order < 1) throw ParameterError("field order must be at least 1");
  SmoothField f;
  f.name = "exp(x)sin(t)";
  f.order = order;
  f.value = [](double x, double t) { return std::exp(x) * std::sin(t); };
  f.d_t = [](double x, double t) { return std::exp(x) * std::cos(t); };
  f.d_x.assign(static_cast<std::size_t>(order), f.value);
  return f;
}

void SmoothField::validate(std::uint64_t seed, int points) const {
  if (order < 1) throw ParameterError("field order must be at least 1");
  if (!value || !d_t || d_x.size() != static_cast<std::size_t>(order)) {
    throw ParameterError("field must supply d/dt and one rule per x-derivative");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const double h = 1e-4;
  auto check = [](double rule, double fd, const char* what) {
    if (std::abs(rule - fd) > 1e-5 * std::max(1.0, std::abs(rule))) {
      throw ParameterError(std::string("derivative rule disagrees with finite differences: ") + what);
    }
  };
  for (int p = 0; p < points; ++p) {
    const double x = coord(rng);
    const double t = coord(rng);
    check(d_t(x, t), (value(x, t + h) - value(x, t - h)) / (2.0 * h), "d/dt");
    const Rule* below = &value;
    for (int j = 0; j < order; ++j) {
      check(d_x[j](x, t), ((*below)(x + h, t) - (*below)(x - h, t)) / (2.0 * h), "d/dx");
      below = &d_x[j];
    }
  }
}

ComplexPath a_coeffs(const SampledPath& X, double eps, int j) {
  if (j < 1) throw ParameterError("coefficient order must be at least 1");
  const std::size_t k = centre_steps(X, eps);
  const auto v = X.values();
  std::vector<Complex> out(X.size() - 2 * k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double plus = ipow((v[i + 2 * k] - v[i + k]) / eps, j);
    // (-1)^j (D-)^j = (-D-)^j
    const double minus = ipow(-((v[i + k] - v[i]) / eps), j);
    out[i] = Complex(0.5 * (plus - minus), -0.5 * (plus + minus));
  }
  return ComplexPath(X.time(k), X.dt(), std::move(out));
}

ComplexPath ito_expand(const SmoothField& field, const SampledPath& X, double eps, int n) {
  if (n < 1) throw ParameterError("expansion order must be at least 1");
  if (n > field.order) throw ParameterError("expansion order exceeds the field's declared order");
  std::vector<ComplexPath> a;
  for (int j = 1; j <= n; ++j) a.push_back(a_coeffs(X, eps, j));
  const std::size_t k = width_to_steps(eps, X.dt());
  std::vector<Complex> out(a[0].size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = X[i + k];
    const double t = a[0].time(i);
    Complex s = field.d_t(x, t);
    double eps_pow = 1.0;
    for (int j = 1; j <= n; ++j) {
      s += (field.d_x[j - 1](x, t) / factorial(j) * eps_pow) * a[j - 1][i];
      eps_pow *= eps;
    }
    out[i] = s;
  }
  return ComplexPath(a[0].t0(), a[0].dt(), std::move(out));
}

ComplexPath composed_scale_derivative(const SmoothField& field, const SampledPath& X, double eps) {
  std::vector<double> g(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) g[i] = field.value(X[i], X.time(i));
  return scale_derivative(SampledPath(X.t0(), X.dt(), std::move(g)), eps);
}

ItoComparison compare_ito(const SmoothField& field, const SampledPath& X, double eps, int n) {
  ItoComparison cmp{composed_scale_derivative(field, X, eps), ito_expand(field, X, eps, n)};
  const std::size_t k = width_to_steps(eps, X.dt());
  const double u = DBL_EPSILON / 2.0;
  for (std::size_t i = 0; i < cmp.direct.size(); ++i) {
    const std::size_t c = i + k;
    const double t = X.time(c);
    const double xp = X[c + k], x0 = X[c], xm = X[c - k];
    const double fp = field.value(xp, X.time(c + k)), f0 = field.value(x0, t), fm = field.value(xm, X.time(c - k));
    const double dp = std::abs(xp - x0) / eps, dm = std::abs(x0 - xm) / eps;
    const double delta = u * (std::abs(xp) + 2.0 * std::abs(x0) + std::abs(xm)) / eps;
    double bound = (std::abs(fp) + 2.0 * std::abs(f0) + std::abs(fm)) / eps * u + std::abs(cmp.direct[i]) * u;
    bound += std::abs(field.d_t(x0, t)) * u;
    double eps_pow = 1.0;
    for (int j = 1; j <= n; ++j) {
      const double w = std::abs(field.d_x[j - 1](x0, t)) / factorial(j) * eps_pow;
      bound += w * (2.0 * j * ipow(dp + dm, j - 1) * delta + (j + 3) * u * ipow(dp + dm, j));
      eps_pow *= eps;
    }
    bound *= 8.0;
    const double err = std::abs(cmp.direct[i] - cmp.expansion[i]);
    cmp.max_error = std::max(cmp.max_error, err);
    cmp.max_excess = std::max(cmp.max_excess, err - bound);
  }
  return cmp;
}

std::vector<ItoSweepRow> ito_sweep(const SmoothField& field, const SampledPath& X, const std::vector<double>& eps_grid,
                                   int n) {
  std::vector<double> widths = eps_grid;
  std::sort(widths.begin(), widths.end(), std::greater<>());
  std::vector<ItoSweepRow> rows;
  for (double eps : widths) {
    const ItoComparison cmp = compare_ito(field, X, eps, n);
    rows.push_back({eps, cmp.max_error, cmp.max_excess, cmp.max_excess / std::sqrt(eps)});
  }
  return rows;
}

bool ratio_non_increasing(const std::vector<ItoSweepRow>& rows, double slack) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].ratio > rows[i - 1].ratio * (1.0 + slack)) return false;
  }
  return true;
}

}  // namespace scalecalc
