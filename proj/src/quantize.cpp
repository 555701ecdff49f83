#include "scalecalc/quantize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "scalecalc/ode.hpp"
#include "scalecalc/scale_ops.hpp"

namespace scalecalc {

Potential Potential::zero() {
  return {"zero", [](double) { return 0.0; }, [](double) { return 0.0; }};
}

Potential Potential::linear(double slope) {
  return {"linear", [slope](double x) { return slope * x; }, [slope](double) { return slope; }};
}

Potential Potential::harmonic(double k) {
  return {"harmonic", [k](double x) { return 0.5 * k * x * x; }, [k](double x) { return k * x; }};
}

Potential Potential::constant(double c) {
  return {"constant", [c](double) { return c; }, [](double) { return 0.0; }};
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
BasicPath<Complex> central_difference(const BasicPath<T>& f) {
  if (f.size() < 3) throw GridError("central differences need at least 3 samples");
  std::vector<Complex> out(f.size() - 2);
  const double two_dt = 2.0 * f.dt();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Complex(f[i + 2] - f[i]) / two_dt;
  return BasicPath<Complex>(f.time(1), f.dt(), std::move(out));
}

}  // namespace

ComplexPath DerivativeRule::apply(const SampledPath& f) const {
  return mode_ == Mode::Central ? central_difference(f) : scale_derivative(f, eps_);
}

ComplexPath DerivativeRule::apply(const ComplexPath& f) const {
  return mode_ == Mode::Central ? central_difference(f) : scale_derivative(f, eps_);
}

DerivativeRule QuantizationMap::route(const SampledPath& X) const {
  width_to_steps(eps, X.dt());
  if (minimal_resolution(X, h).at_grid_floor()) return DerivativeRule::central();
  return DerivativeRule::scale(eps);
}

ComplexPath QuantizedEulerLagrange::residual(const SampledPath& X) const {
  const ComplexPath V = rule.apply(X);
  const ComplexPath W = rule.apply(V);
  const std::ptrdiff_t off = index_offset(X, W);
  std::vector<Complex> out(W.size());
  for (std::size_t i = 0; i < W.size(); ++i) {
    out[i] = inertia * W[i] - force(X[static_cast<std::size_t>(off) + i]);
  }
  return ComplexPath(W.t0(), W.dt(), std::move(out));
}

EulerLagrangeEquation euler_lagrange(const ClassicalLagrangian& L) {
  if (!(L.m > 0.0)) throw ParameterError("mass must be positive");
  return {L.m, L.potential.dU};
}

QuantizedEulerLagrange quantize(const EulerLagrangeEquation& eq, const DerivativeRule& rule) {
  return {eq.inertia, eq.force, rule};
}

QuantizedLagrangian quantize(const ClassicalLagrangian& L, const DerivativeRule& rule) {
  if (!(L.m > 0.0)) throw ParameterError("mass must be positive");
  return {0.5 * L.m, L.potential, rule};
}

QuantizedEulerLagrange scale_euler_lagrange(const QuantizedLagrangian& L) {
  // dL/dV = 2 kinetic V, dL/dX = U'(X).
  return {2.0 * L.kinetic, L.potential.dU, L.rule};
}

ComplexPath complex_velocity(const SampledPath& X, double eps) { return scale_derivative(X, eps); }

ComplexPath el_residual(const ClassicalLagrangian& L, const SampledPath& X, double eps) {
  return quantize(euler_lagrange(L), DerivativeRule::scale(eps)).residual(X);
}

// ---------------------------------------------------------------------------

ActionWave action_and_wave(const ComplexPath& V, double m, double gamma) {
  if (gamma == 0.0 || !std::isfinite(gamma)) throw ParameterError("gamma_norm must be finite and nonzero");
  if (!(m > 0.0)) throw ParameterError("mass must be positive");
  std::vector<Complex> A(V.size());
  A[0] = 0.0;
  for (std::size_t j = 1; j < V.size(); ++j) A[j] = A[j - 1] + (0.5 * V.dt() * m) * (V[j - 1] + V[j]);
  std::vector<Complex> psi(V.size());
  const Complex scale(0.0, 1.0 / (2.0 * m * gamma));
  for (std::size_t j = 0; j < V.size(); ++j) psi[j] = std::exp(scale * A[j]);
  return {ComplexPath(V.t0(), V.dt(), std::move(A)), ComplexPath(V.t0(), V.dt(), std::move(psi))};
}

ComplexPath velocity_from_wave(const ComplexPath& psi, double gamma) {
  if (psi.size() < 3) throw GridError("need at least 3 samples");
  std::vector<Complex> out(psi.size() - 2);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Complex d = (psi[j + 2] - psi[j]) / (2.0 * psi.dt());
    out[j] = Complex(0.0, -2.0 * gamma) * (d / psi[j + 1]);
  }
  return ComplexPath(psi.time(1), psi.dt(), std::move(out));
}

// ---------------------------------------------------------------------------

void WaveGrid::validate() const {
  if (!(dx > 0.0) || !(dtt > 0.0)) throw ParameterError("wave grid steps must be positive");
  if (nx < 3 || nt < 3) throw ParameterError("wave grid needs at least 3 nodes in x and t");
}

void WaveField::validate() const {
  grid.validate();
  if (psi.size() != grid.nx * grid.nt) throw ParameterError("wave field size does not match its grid");
  if (!(m > 0.0)) throw ParameterError("mass must be positive");
  for (const Complex& z : psi) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParameterError("wave field is not finite");
  }
}

kernels::WaveGridView WaveField::view() const { return {psi, grid.nx, grid.nt, grid.dx, grid.dtt}; }

WaveField WaveField::sample(const WaveGrid& grid, const std::function<Complex(double, double)>& fn) {
  grid.validate();
  WaveField f;
  f.grid = grid;
  f.psi.resize(grid.nx * grid.nt);
  for (std::size_t k = 0; k < grid.nt; ++k) {
    for (std::size_t j = 0; j < grid.nx; ++j) f.psi[k * grid.nx + j] = fn(grid.x(j), grid.t(k));
  }
  return f;
}

double ResidualGrid::sup_norm() const {
  double s = 0.0;
  for (const Complex& z : values) s = std::max(s, std::abs(z));
  return s;
}

namespace {

void check_floor(const WaveField& field, double floor) {
  for (std::size_t k = 0; k < field.grid.nt; ++k) {
    for (std::size_t j = 0; j < field.grid.nx; ++j) {
      if (std::abs(field.at(j, k)) < floor) {
        throw NodeError(j, k, "|psi| below floor at x index " + std::to_string(j) + ", t index " + std::to_string(k));
      }
    }
  }
}

ResidualGrid run_residual(const WaveField& field, const std::vector<kernels::SliceCoefficients>& slices,
                          const std::vector<double>& potential, kernels::GradientForm form) {
  const WaveGrid& g = field.grid;
  ResidualGrid out{g.nx - 2, g.nt - 2, g.x(1), g.dx, g.t(1), g.dtt, {}};
  out.values.resize(out.nx * out.nt);
  kernels::omp::schrodinger_residual(field.view(), slices, potential, form, out.values);
  return out;
}

std::vector<double> potential_table(const WaveGrid& g, const Potential& U,
                                    const std::function<double(double)>* alpha_gauge) {
  std::vector<double> v(g.nx);
  for (std::size_t j = 0; j < g.nx; ++j) {
    v[j] = U.U(g.x(j));
    if (alpha_gauge) v[j] += (*alpha_gauge)(g.x(j));
  }
  return v;
}

}  // namespace

ResidualGrid gse_residual(const WaveField& field, const ComplexPath& a_eps, const Potential& U,
                          const std::function<double(double)>& alpha_gauge, const GseOptions& options) {
  field.validate();
  check_floor(field, options.psi_floor);
  const WaveGrid& g = field.grid;
  if (std::abs(a_eps.dt() - g.dtt) > 1e-12 * g.dtt) throw GridError("a_eps is not sampled on the field's t-grid");
  const double off_r = (g.t0 - a_eps.t0()) / g.dtt;
  const double off_k = std::round(off_r);
  if (std::abs(off_r - off_k) > 1e-6) throw GridError("a_eps is not sampled on the field's t-grid");
  const auto off = static_cast<std::ptrdiff_t>(off_k);
  if (off + 1 < 0 || off + static_cast<std::ptrdiff_t>(g.nt) - 2 >= static_cast<std::ptrdiff_t>(a_eps.size())) {
    throw GridError("a_eps does not cover the interior t-nodes");
  }

  const double gamma = field.gamma_norm;
  const Complex c_t(0.0, 2.0 * field.m * gamma);
  std::vector<kernels::SliceCoefficients> slices(g.nt);
  for (std::size_t k = 1; k + 1 < g.nt; ++k) {
    const Complex half_a = a_eps[static_cast<std::size_t>(off + static_cast<std::ptrdiff_t>(k))] / 2.0;
    slices[k] = {c_t, c_t * half_a, -(c_t * (Complex(0.0, gamma) + half_a))};
  }
  ResidualGrid out = run_residual(field, slices, potential_table(g, U, &alpha_gauge), kernels::GradientForm::OverPsi);
  if (options.form == GseForm::PerPsi) {
    for (std::size_t k = 0; k < out.nt; ++k) {
      for (std::size_t j = 0; j < out.nx; ++j) out.values[k * out.nx + j] /= field.at(j + 1, k + 1);
    }
  }
  return out;
}

ResidualGrid classical_schrodinger_residual(const WaveField& field, const Potential& U) {
  field.validate();
  const WaveGrid& g = field.grid;
  const double hbar = field.hbar;
  const kernels::SliceCoefficients c{Complex(0.0, hbar), Complex(hbar * (hbar / (2.0 * field.m)), 0.0),
                                     Complex(0.0, 0.0)};
  const std::vector<kernels::SliceCoefficients> slices(g.nt, c);
  return run_residual(field, slices, potential_table(g, U, nullptr), kernels::GradientForm::TimesPsi);
}

ResidualGrid nngse_residual(const WaveField& field, const Potential& U, Complex alpha_c, double psi_floor) {
  field.validate();
  check_floor(field, psi_floor);
  const WaveGrid& g = field.grid;
  const Complex i_alpha(-alpha_c.imag(), alpha_c.real());
  const kernels::SliceCoefficients c{i_alpha, alpha_c * (alpha_c.real() / (2.0 * field.m)),
                                     i_alpha * (alpha_c.imag() / (2.0 * field.m))};
  const std::vector<kernels::SliceCoefficients> slices(g.nt, c);
  return run_residual(field, slices, potential_table(g, U, nullptr), kernels::GradientForm::TimesPsi);
}

ComplexPath constant_a_eps(const WaveGrid& grid, double gamma) {
  return ComplexPath(grid.t0, grid.dtt, std::vector<Complex>(grid.nt, Complex(0.0, -2.0 * gamma)));
}

WaveField plane_wave(const WaveGrid& grid, double k, double omega, double m, double hbar) {
  WaveField f = WaveField::sample(grid, [k, omega](double x, double t) {
    return std::exp(Complex(0.0, k * x - omega * t));
  });
  f.m = m;
  f.hbar = hbar;
  f.gamma_norm = hbar / (2.0 * m);
  return f;
}

WaveField free_gaussian(const WaveGrid& grid, double sigma, double m, double hbar) {
  if (!(sigma > 0.0)) throw ParameterError("packet width must be positive");
  WaveField f = WaveField::sample(grid, [sigma, m, hbar](double x, double t) {
    const Complex s(sigma * sigma, hbar * t / m);
    return sigma / std::sqrt(s) * std::exp(-x * x / (2.0 * s));
  });
  f.m = m;
  f.hbar = hbar;
  f.gamma_norm = hbar / (2.0 * m);
  return f;
}

// ---------------------------------------------------------------------------

ConditionReport schrodinger_condition_check(const SampledPath& X, double eps, double hbar, double m, double tol) {
  if (!(hbar > 0.0) || !(m > 0.0)) throw ParameterError("hbar and m must be positive");
  const std::size_t k = width_to_steps(eps, X.dt());
  if (2 * k >= X.size()) throw GridError("stencil does not fit the path");
  const double target = hbar / m;
  ConditionReport rep;
  for (std::size_t c = k; c + k < X.size(); ++c) {
    const double plus = (X[c + k] - X[c]) / eps;
    const double minus = (X[c] - X[c - k]) / eps;
    rep.max_side_gap = std::max(rep.max_side_gap, std::abs(plus - minus));
    rep.max_square_gap = std::max(rep.max_square_gap, std::abs(plus * plus - target));
  }
  rep.verdict = rep.max_side_gap < tol && rep.max_square_gap < tol;
  return rep;
}

namespace {

// Cubic Lagrange interpolation of uniform samples at fractional index s.
Complex interpolate(const std::vector<Complex>& v, double s) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  if (n < 4) {
    const auto i = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(std::floor(s)), 0, n - 2);
    const double w = s - static_cast<double>(i);
    return (1.0 - w) * v[static_cast<std::size_t>(i)] + w * v[static_cast<std::size_t>(i + 1)];
  }
  const auto base = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(std::floor(s)) - 1, 0, n - 4);
  Complex r = 0.0;
  for (int a = 0; a < 4; ++a) {
    double w = 1.0;
    for (int b = 0; b < 4; ++b) {
      if (b != a) w *= (s - static_cast<double>(base + b)) / static_cast<double>(a - b);
    }
    r += w * v[static_cast<std::size_t>(base + a)];
  }
  return r;
}

}  // namespace

ComplexPath solve_linear_second_order(const std::vector<Complex>& p, const std::vector<Complex>& q, double x0,
                                      double dx, Complex theta0, Complex dtheta0) {
  if (p.size() != q.size() || p.size() < 2) throw ParameterError("coefficient tables must match and hold 2+ samples");
  if (!(dx > 0.0)) throw ParameterError("grid step must be positive");
  using State = OdeState<Complex, 2>;
  auto rhs = [&](double x, const State& y) {
    const double s = (x - x0) / dx;
    return State{y[1], -interpolate(p, s) * y[1] - interpolate(q, s) * y[0]};
  };
  const auto traj = rk4_integrate<Complex, 2>(rhs, x0, x0 + dx * static_cast<double>(p.size() - 1),
                                              State{theta0, dtheta0}, p.size() - 1);
  std::vector<Complex> out;
  out.reserve(traj.size());
  for (const auto& [x, y] : traj) out.push_back(y[0]);
  return ComplexPath(x0, dx, std::move(out));
}

ComplexPath phase_gauge_solve(const WaveField& field, const std::function<double(double)>& alpha_gauge,
                              std::size_t t_index, double psi_floor) {
  field.validate();
  const WaveGrid& g = field.grid;
  if (t_index >= g.nt) throw ParameterError("t-slice index out of range");
  const double gamma = field.gamma_norm;
  if (gamma == 0.0) throw SingularityError("gamma_norm = 0 makes the leading coefficient vanish");
  std::vector<Complex> psi(g.nx);
  for (std::size_t j = 0; j < g.nx; ++j) {
    psi[j] = field.at(j, t_index);
    if (std::abs(psi[j]) < psi_floor) throw SingularityError("psi vanishes on the slice: the leading coefficient is 0");
  }
  std::vector<Complex> p(g.nx), q(g.nx);
  const std::size_t n = g.nx;
  for (std::size_t j = 0; j < n; ++j) {
    Complex psi_x;
    if (j == 0) {
      psi_x = (-3.0 * psi[0] + 4.0 * psi[1] - psi[2]) / (2.0 * g.dx);
    } else if (j + 1 == n) {
      psi_x = (3.0 * psi[n - 1] - 4.0 * psi[n - 2] + psi[n - 3]) / (2.0 * g.dx);
    } else {
      psi_x = (psi[j + 1] - psi[j - 1]) / (2.0 * g.dx);
    }
    // b / c and a / c
    p[j] = 2.0 * psi_x / psi[j];
    q[j] = alpha_gauge(g.x(j)) / (2.0 * gamma * gamma * field.m);
  }
  return solve_linear_second_order(p, q, g.x0, g.dx, 1.0, 0.0);
}

WaveField apply_gauge(const WaveField& field, const ComplexPath& theta) {
  if (theta.size() != field.grid.nx) throw ParameterError("gauge factor must match the x-grid");
  WaveField out = field;
  for (std::size_t k = 0; k < field.grid.nt; ++k) {
    for (std::size_t j = 0; j < field.grid.nx; ++j) out.psi[k * field.grid.nx + j] *= theta[j];
  }
  return out;
}

std::vector<double> default_heisenberg_lags(const SampledPath& X) {
  return dyadic_widths(X.dt(), 4.0 * X.dt(), X.span_length() / 32.0);
}

HeisenbergFit heisenberg_scaling_check(const SampledPath& X, std::vector<double> lags) {
  for (double l : lags) width_to_steps(l, X.dt());
  std::sort(lags.begin(), lags.end(), std::greater<>());
  lags.erase(std::unique(lags.begin(), lags.end()), lags.end());
  if (lags.size() < 4) throw ParameterError("Heisenberg check needs at least 4 lags");
  HeisenbergFit fit;
  fit.lags = lags;
  std::vector<double> x, y;
  for (double l : lags) {
    const std::size_t k = width_to_steps(l, X.dt());
    if (k >= X.size()) throw ParameterError("lag exceeds the domain");
    const double chord = kernels::omp::mean_chord(X.values(), X.dt(), k);
    fit.chords.push_back(chord);
    x.push_back(std::log(l));
    y.push_back(std::log(chord));
  }
  const LinearFit line = fit_line(x, y);
  fit.exponent = line.slope;
  fit.intercept = line.intercept;
  fit.residual = line.residual;
  return fit;
}

}  // namespace scalecalc
