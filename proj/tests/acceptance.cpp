// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "scalecalc/core_paths.hpp"
#include "scalecalc/expansion.hpp"
#include "scalecalc/local_fractional.hpp"
#include "scalecalc/quantize.hpp"
#include "scalecalc/quantum_algebra.hpp"
#include "scalecalc/scale_laws.hpp"
#include "scalecalc/scale_ops.hpp"

using namespace scalecalc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

SampledPath takagi(double alpha, int log2n) {
  const auto grid = oracle::dyadic_grid(0.0, 1.0, log2n);
  return gen_takagi(alpha, takagi_terms_for(alpha, grid.dt), grid);
}

std::vector<double> dyadic(int lo, int hi) {
  std::vector<double> w;
  for (int k = lo; k <= hi; ++k) w.push_back(std::ldexp(1.0, -k));
  return w;
}

Outcome leibniz() {
  constexpr double kTol = 1e-10;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> deg(0, 5);
  std::uniform_int_distribution<int> steps(1, 64);
  const auto grid = oracle::dyadic_grid(0.0, 1.0, 10);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto cf = oracle::random_poly(rng, deg(rng));
    const auto cg = oracle::random_poly(rng, deg(rng));
    const SampledPath f = sample(grid, [&](double t) { return oracle::horner(cf, t); });
    const SampledPath g = sample(grid, [&](double t) { return oracle::horner(cg, t); });
    const SampledPath fg = sample(grid, [&](double t) { return oracle::horner(cf, t) * oracle::horner(cg, t); });
    const double eps = steps(rng) * grid.dt;
    for (Side s : {Side::Forward, Side::Backward}) {
      const SampledPath dfg = quantum_diff(fg, eps, s);
      const SampledPath df = quantum_diff(f, eps, s);
      const SampledPath dg = quantum_diff(g, eps, s);
      const std::ptrdiff_t off = index_offset(f, df);
      for (std::size_t i = 0; i < dfg.size(); ++i) {
        const double fi = f[i + off], gi = g[i + off];
        const double rhs = df[i] * gi + fi * dg[i] + sigma(s) * eps * df[i] * dg[i];
        worst = std::max(worst, std::abs(dfg[i] - rhs));
      }
    }
  }
  return {worst <= kTol, fmt("max deviation %.3g (tol %.0e)", worst, kTol)};
}

Outcome gluing() {
  constexpr double kTol = 1e-12;
  const SampledPath f = sample(oracle::dyadic_grid(-1.0, 2.0, 10), [](double t) { return t * t; });
  double worst_formula = 0.0, worst_dist = 0.0;
  for (std::size_t k = 1; 2 * k < f.size(); k *= 2) {
    const double eps = k * f.dt();
    const ComplexPath d = scale_derivative(f, eps);
    double dist = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double t = d.time(i);
      worst_formula = std::max(worst_formula, std::abs(d[i] - Complex(2.0 * t, -eps)));
      dist = std::max(dist, std::abs(d[i] - 2.0 * t));
    }
    worst_dist = std::max(worst_dist, std::abs(dist - eps));
  }
  return {worst_formula <= kTol && worst_dist <= kTol,
          fmt("|D f - (2t - i eps)| %.3g, |dist - eps| %.3g (tol %.0e)", worst_formula, worst_dist, kTol)};
}

Outcome scale_law() {
  const ScaleLawFit fit = fit_holder_exponent(takagi(0.5, 16), dyadic(5, 12));
  return {fit.alpha_hat >= 0.45 && fit.alpha_hat <= 0.55, fmt("alpha_hat %.4f (want [0.45, 0.55])", fit.alpha_hat)};
}

Outcome box_dim() {
  const SampledPath f = takagi(0.5, 16);
  const BoxDimension d = box_counting_dimension(f, default_fit_widths(f));
  return {d.dimension >= 1.4 && d.dimension <= 1.6, fmt("dimension %.4f (want [1.4, 1.6])", d.dimension)};
}

Outcome ode_conjugacy() {
  constexpr double kConj = 1e-6, kLin = 1e-8;
  double worst_conj = 0.0, worst_lin = 0.0;
  for (double alpha : {0.2, 0.5, 0.8}) {
    for (double y0 : {1.2, 2.0, 5.0}) {
      const auto y = scale_law_ode(ScaleLawForm::Holder, alpha, y0, 0.0, -8.0, 4000);
      const auto x = scale_law_ode(ScaleLawForm::Inverse, alpha, 1.0 / y0, 0.0, -8.0, 4000);
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = 1.0 / y[i].value;
        worst_conj = std::max(worst_conj, std::abs(x[i].value - r) / std::abs(r));
      }
    }
    const auto z = scale_law_ode(ScaleLawForm::Linear, alpha, 1.3, 0.0, -8.0, 4000);
    for (const auto& p : z) {
      const double ref = 1.3 * std::exp((1.0 - alpha) * p.log_eps);
      worst_lin = std::max(worst_lin, std::abs(p.value - ref) / ref);
    }
  }
  return {worst_conj <= kConj && worst_lin <= kLin,
          fmt("conjugacy rel %.3g (tol 1e-6), linear rel %.3g (tol 1e-8)", worst_conj, worst_lin)};
}

Outcome ito_trend() {
  const auto rows = ito_sweep(SmoothField::monomial(2, 2), takagi(0.5, 16), dyadic(5, 10), 2);
  double raw = 0.0;
  for (const auto& r : rows) raw = std::max(raw, r.max_error);
  return {ratio_non_increasing(rows),
          fmt("excess/eps^0.5 %.3g -> %.3g (non-increasing), largest raw error %.3g", rows.front().ratio,
              rows.back().ratio, raw)};
}

Outcome bialgebra() {
  constexpr double kTol = 1e-10;
  const AlgebraReport r = run_algebra_checks({});
  return {r.ok(kTol) && r.trials == 100 && r.max_word_len == 3,
          std::string(r.homomorphism ? "" : "homomorphism broken; ") + (r.counit ? "" : "counit broken; ") +
              (r.coassociative ? "" : "coassociativity broken; ") + (r.cocommutative ? "" : "cocommutativity broken; ") +
              fmt("words %.0f, diagram max error %.3g (tol %.0e)", static_cast<double>(r.words_checked), r.max_error, kTol)};
}

Outcome schrodinger_condition() {
  constexpr double kTol = 1e-12;
  bool ok = true;
  double worst_a2 = 0.0;
  for (double hbar_over_m : {1.0, 0.25}) {
    for (double amp : {0.0, 0.5}) {
      for (int sign : {1, -1}) {
        PrincipalPathSpec spec;
        spec.hbar_over_m = hbar_over_m;
        spec.eps = 0.0625;
        spec.sign = sign;
        spec.c = 0.1;
        spec.perturbation_amplitude = amp;
        const SampledPath X = gen_principal_schrodinger(spec, oracle::dyadic_grid(0.0, 1.0, 10));
        ok = ok && schrodinger_condition_check(X, spec.eps, hbar_over_m, 1.0, kTol).verdict;
        for (const Complex& a : a_coeffs(X, spec.eps, 2).values()) {
          worst_a2 = std::max(worst_a2, std::abs(a - Complex(0.0, -hbar_over_m)));
        }
      }
    }
  }
  return {ok && worst_a2 <= kTol,
          std::string(ok ? "all verdicts true" : "some verdict false") + fmt(", |a2 + i hbar/m| %.3g (tol 1e-12)", worst_a2)};
}

WaveGrid packet_grid(int level) {
  const std::size_t nx = (std::size_t{128} << level) + 1;
  const std::size_t nt = (std::size_t{32} << level) + 1;
  return WaveGrid{-6.0, 12.0 / static_cast<double>(nx - 1), nx, 0.0, 0.5 / static_cast<double>(nt - 1), nt};
}

bool bit_equal(const ResidualGrid& a, const ResidualGrid& b) {
  return a.values.size() == b.values.size() &&
         std::equal(a.values.begin(), a.values.end(), b.values.begin(),
                    [](const Complex& x, const Complex& y) { return x == y; });
}

Outcome classical_reduction() {
  bool equal = true;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (double m : {1.0, 0.5, 2.0}) {
    const double hbar = 1.0, gamma = hbar / (2.0 * m);
    const double a = u(rng), b = u(rng);
    WaveField f = WaveField::sample(packet_grid(0), [=](double x, double t) {
      return Complex(2.0 + std::sin(a * x + t), std::cos(b * x - t));
    });
    f.m = m;
    f.hbar = hbar;
    f.gamma_norm = gamma;
    const Potential U = Potential::harmonic(0.5);
    equal = equal && bit_equal(gse_residual(f, constant_a_eps(f.grid, gamma), U, [](double) { return 0.0; }),
                               classical_schrodinger_residual(f, U));
  }
  const double r1 = classical_schrodinger_residual(free_gaussian(packet_grid(1), 1.0, 1.0, 1.0), Potential::zero()).sup_norm();
  const double r2 = classical_schrodinger_residual(free_gaussian(packet_grid(2), 1.0, 1.0, 1.0), Potential::zero()).sup_norm();
  const double ratio = r1 / r2;
  return {equal && ratio >= 3.0 && ratio <= 5.0,
          std::string(equal ? "bit-exact" : "NOT bit-exact") + fmt(", Gaussian contraction %.3f (want [3, 5])", ratio)};
}

Outcome nngse() {
  bool equal = true;
  for (double hbar : {1.0, 0.5, 0.25}) {
    WaveField f = WaveField::sample(packet_grid(0), [](double x, double t) {
      return Complex(1.5 + std::cos(x - t), 0.5 * std::sin(2.0 * x));
    });
    f.hbar = hbar;
    const Potential U = Potential::linear(0.4);
    equal = equal && bit_equal(nngse_residual(f, U, Complex(hbar, 0.0)), classical_schrodinger_residual(f, U));
  }
  return {equal, equal ? "bit-exact for hbar in {1, 0.5, 0.25}" : "residuals differ"};
}

Outcome heisenberg() {
  const SampledPath tk = takagi(0.5, 16);
  const SampledPath line = sample(oracle::dyadic_grid(0.0, 1.0, 16), [](double t) { return t; });
  const double et = heisenberg_scaling_check(tk, default_heisenberg_lags(tk)).exponent;
  const double el = heisenberg_scaling_check(line, default_heisenberg_lags(line)).exponent;
  return {et >= 0.4 && et <= 0.6 && el >= 0.9 && el <= 1.1,
          fmt("Takagi %.4f (want [0.4, 0.6]), line %.4f (want [0.9, 1.1])", et, el)};
}

Outcome coherence() {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int equal = 0;
  const auto grid = oracle::dyadic_grid(0.0, 1.0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    const double m = std::ldexp(1.0, trial % 4 - 1);
    const Potential potentials[] = {Potential::zero(), Potential::linear(u(rng)), Potential::harmonic(u(rng)),
                                    Potential::constant(u(rng))};
    const ClassicalLagrangian L{m, potentials[trial % 4]};
    const SampledPath X = trial % 2 == 0 ? gen_takagi(0.5 + 0.4 * u(rng), 24, grid)
                                         : sample(grid, [c = oracle::random_poly(rng, 3)](double t) {
                                             return oracle::horner(c, t);
                                           });
    const DerivativeRule rule = QuantizationMap{std::ldexp(1.0, -5 - trial % 3), 1.0}.route(X);
    const ComplexPath a = quantize(euler_lagrange(L), rule).residual(X);
    const ComplexPath b = scale_euler_lagrange(quantize(L, rule)).residual(X);
    bool same = a.size() == b.size() && a.t0() == b.t0();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    equal += same;
  }
  return {equal == 20, fmt("%.0f of 20 instances identical", equal)};
}

Outcome fractional() {
  constexpr double kTol = 1e-3;
  const auto grid = oracle::dyadic_grid(0.0, 1.0, 16);
  double worst_power = 0.0, worst_smooth = 0.0;
  bool converged = true;
  for (double alpha : {0.3, 0.5, 0.7}) {
    const SampledPath p = sample(grid, [&](double t) { return t >= 0.5 ? std::pow(t - 0.5, alpha) : 0.0; });
    const FracEstimate e = local_frac_deriv(p, 0.5, alpha, Side::Forward);
    converged = converged && e.flag == FracFlag::Converged;
    worst_power = std::max(worst_power, std::abs(e.value - 1.0));
    for (auto fn : {+[](double t) { return std::sin(3.0 * t); }, +[](double t) { return t * t - t; },
                    +[](double t) { return std::exp(t); }}) {
      const SampledPath s = sample(grid, fn);
      for (Side side : {Side::Forward, Side::Backward}) {
        const FracEstimate d = local_frac_deriv(s, 0.5, alpha, side);
        converged = converged && d.flag == FracFlag::Converged;
        worst_smooth = std::max(worst_smooth, std::abs(d.value));
      }
    }
  }
  return {converged && worst_power <= kTol && worst_smooth <= kTol,
          fmt("|d(t-t0)^a - 1| %.3g, smooth |d| %.3g (tol %.0e)", worst_power, worst_smooth, kTol) +
              (converged ? "" : ", some estimate not converged")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "deformed Leibniz exactness", 1.0, leibniz},
      {2, "gluing for t^2", 1.0, gluing},
      {3, "scale-law fit on Takagi 1/2", 10.0, scale_law},
      {4, "box-counting dimension of Takagi 1/2", 10.0, box_dim},
      {5, "scale-law ODE conjugacy", 0.0, ode_conjugacy},
      {6, "Ito remainder trend", 10.0, ito_trend},
      {7, "bialgebra axioms and evaluation diagram", 5.0, bialgebra},
      {8, "Schroedinger condition on principal paths", 1.0, schrodinger_condition},
      {9, "classical reduction of the generalized equation", 30.0, classical_reduction},
      {10, "nngse consistency", 0.0, nngse},
      {11, "Heisenberg scaling", 10.0, heisenberg},
      {12, "coherence of quantization orders", 0.0, coherence},
      {13, "local fractional oracle", 0.0, fractional},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0.0 || secs < c.time_limit_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s  %2d  %-48s %s; %.2fs", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    if (c.time_limit_s > 0.0) std::printf(" (limit %.0fs)", c.time_limit_s);
    std::printf("\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
