#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scalecalc/fit.hpp"
#include "scalecalc/kernels.hpp"
#include "scalecalc/paths.hpp"

namespace scalecalc {

// ---------------------------------------------------------------------------
// Lagrangians and the quantization map

/// Potential U(x) with its analytic derivative.
struct Potential {
  std::string name;
  std::function<double(double)> U;
  std::function<double(double)> dU;

  static Potential zero();
  /// U = slope * x
  static Potential linear(double slope);
  /// U = k x^2 / 2
  static Potential harmonic(double k);
  /// U = c
  static Potential constant(double c);
};

/// L(x, v) = m v^2 / 2 + U(x); the Euler-Lagrange equation reads m x'' = U'(x).
struct ClassicalLagrangian {
  double m = 1.0;
  Potential potential;
};

/// Derivative along a path: plain central differences or the scale derivative.
class DerivativeRule {
 public:
  enum class Mode { Central, Scale };

  static DerivativeRule central() { return DerivativeRule(Mode::Central, 0.0); }
  static DerivativeRule scale(double eps) { return DerivativeRule(Mode::Scale, eps); }

  Mode mode() const { return mode_; }
  double eps() const { return eps_; }
  ComplexPath apply(const SampledPath& f) const;
  ComplexPath apply(const ComplexPath& f) const;

  friend bool operator==(const DerivativeRule&, const DerivativeRule&) = default;

 private:
  DerivativeRule(Mode mode, double eps) : mode_(mode), eps_(eps) {}
  Mode mode_;
  double eps_;
};

/// Q: paths whose h-minimal resolution sits at the grid floor keep d/dt (central
/// differences), all others get the scale derivative of width eps.
struct QuantizationMap {
  double eps = 0.0;
  double h = 1.0;

  DerivativeRule route(const SampledPath& X) const;
};

/// inertia * D(D X) - force(X), the common form of both quantization orders.
struct QuantizedEulerLagrange {
  double inertia = 0.0;
  std::function<double(double)> force;
  DerivativeRule rule = DerivativeRule::central();

  /// Residual on the sub-grid where both derivatives exist.
  ComplexPath residual(const SampledPath& X) const;
};

/// Classical Euler-Lagrange equation m x'' = U'(x), kept as data.
struct EulerLagrangeEquation {
  double inertia;
  std::function<double(double)> force;
};

/// Quantized Lagrangian L(X, V) = kinetic V^2 + U(X) with its derivative rule.
struct QuantizedLagrangian {
  double kinetic;  // coefficient of V^2
  Potential potential;
  DerivativeRule rule;
};

EulerLagrangeEquation euler_lagrange(const ClassicalLagrangian& L);
/// Q applied to the equation: d/dt -> rule.
QuantizedEulerLagrange quantize(const EulerLagrangeEquation& eq, const DerivativeRule& rule);
/// Q applied to the Lagrangian.
QuantizedLagrangian quantize(const ClassicalLagrangian& L, const DerivativeRule& rule);
/// Scale Euler-Lagrange equation D(dL/dV) = dL/dX of a quantized Lagrangian.
QuantizedEulerLagrange scale_euler_lagrange(const QuantizedLagrangian& L);

/// V = scale derivative of X.
ComplexPath complex_velocity(const SampledPath& X, double eps);

/// m D(D X) - U'(X) with D the scale derivative of width eps.
ComplexPath el_residual(const ClassicalLagrangian& L, const SampledPath& X, double eps);

// ---------------------------------------------------------------------------
// Action and wave function

struct ActionWave {
  /// A(x), cumulative trapezoid of m V with A(x0) = 0.
  ComplexPath action;
  /// psi = exp(i A / (2 m gamma)).
  ComplexPath psi;
};

/// V sampled along the x-grid (t0 = x0, dt = dx).
ActionWave action_and_wave(const ComplexPath& V, double m, double gamma);

/// V = -2 i gamma psi_x / psi at interior x-nodes.
ComplexPath velocity_from_wave(const ComplexPath& psi, double gamma);

// ---------------------------------------------------------------------------
// Wave fields and residuals

struct WaveGrid {
  double x0 = 0.0;
  double dx = 0.0;
  std::size_t nx = 0;
  double t0 = 0.0;
  double dtt = 0.0;
  std::size_t nt = 0;

  double x(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
  double t(std::size_t k) const { return t0 + static_cast<double>(k) * dtt; }
  void validate() const;
};

/// psi(x_j, t_k) stored at k * nx + j.
struct WaveField {
  WaveGrid grid;
  std::vector<Complex> psi;
  double gamma_norm = 0.5;
  double m = 1.0;
  double hbar = 1.0;

  const Complex& at(std::size_t j, std::size_t k) const { return psi[k * grid.nx + j]; }
  /// Throws ParameterError on inconsistent sizes or non-finite values.
  void validate() const;
  kernels::WaveGridView view() const;

  static WaveField sample(const WaveGrid& grid, const std::function<Complex(double x, double t)>& fn);
};

/// Residual at interior nodes, values[(k-1)(nx-2) + (j-1)].
struct ResidualGrid {
  std::size_t nx = 0;
  std::size_t nt = 0;
  double x0 = 0.0;
  double dx = 0.0;
  double t0 = 0.0;
  double dtt = 0.0;
  std::vector<Complex> values;

  double sup_norm() const;
};

enum class GseForm {
  /// 2 i gamma m [psi_t + (a/2) psi_xx - (psi_x)^2 / psi (i gamma + a/2)] - (U + alpha) psi
  Wave,
  /// The same residual divided by psi.
  PerPsi,
};

struct GseOptions {
  GseForm form = GseForm::Wave;
  /// Nodes with |psi| below this raise NodeError.
  double psi_floor = 1e-12;
};

/// a_eps must be sampled on the field's t-grid and cover every interior t-node.
ResidualGrid gse_residual(const WaveField& field, const ComplexPath& a_eps, const Potential& U,
                          const std::function<double(double)>& alpha_gauge, const GseOptions& options = {});

/// i hbar psi_t + hbar (hbar / 2m) psi_xx - U psi.
ResidualGrid classical_schrodinger_residual(const WaveField& field, const Potential& U);

/// i a psi_t + a (Re a / 2m) psi_xx - U psi + i a (Im a / 2m) (psi_x)^2 psi.
ResidualGrid nngse_residual(const WaveField& field, const Potential& U, Complex alpha_c, double psi_floor = 1e-12);

/// Constant a_eps = -2 i gamma on the field's t-grid.
ComplexPath constant_a_eps(const WaveGrid& grid, double gamma);

/// exp(i (k x - omega t))
WaveField plane_wave(const WaveGrid& grid, double k, double omega, double m, double hbar);
/// Free packet sigma s^{-1/2} exp(-x^2 / (2 s)), s = sigma^2 + i hbar t / m.
WaveField free_gaussian(const WaveGrid& grid, double sigma, double m, double hbar);

// ---------------------------------------------------------------------------
// Schroedinger condition, phase gauge, Heisenberg scaling

struct ConditionReport {
  /// max |D+ X - D- X|
  double max_side_gap = 0.0;
  /// max |(D+ X)^2 - hbar/m|
  double max_square_gap = 0.0;
  bool verdict = false;
};

ConditionReport schrodinger_condition_check(const SampledPath& X, double eps, double hbar, double m, double tol);

/// Theta'' + p(x) Theta' + q(x) Theta = 0 on a uniform grid by RK4 with step dx;
/// p and q at half steps come from cubic Lagrange interpolation.
ComplexPath solve_linear_second_order(const std::vector<Complex>& p, const std::vector<Complex>& q, double x0,
                                      double dx, Complex theta0, Complex dtheta0);

/// Theta on the slice t_k with c Theta'' + b Theta' + a Theta = 0, where
/// a = alpha psi, b = 4 gamma^2 m psi_x, c = 2 gamma^2 m psi; Theta(x0) = 1, Theta'(x0) = 0.
ComplexPath phase_gauge_solve(const WaveField& field, const std::function<double(double)>& alpha_gauge,
                              std::size_t t_index, double psi_floor = 1e-12);

/// psi(x, t) Theta(x) on every slice.
WaveField apply_gauge(const WaveField& field, const ComplexPath& theta);

struct HeisenbergFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  std::vector<double> lags;
  std::vector<double> chords;
};

/// Dyadic lags from a 32nd of the domain down to 4 dt.
std::vector<double> default_heisenberg_lags(const SampledPath& X);

/// Mean chord |(t, X(t)) - (t + dt, X(t + dt))| per lag, log-log slope. Needs >= 4 lags.
HeisenbergFit heisenberg_scaling_check(const SampledPath& X, std::vector<double> lags);

}  // namespace scalecalc
