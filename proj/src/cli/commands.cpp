#include <algorithm>
#include <cmath>
#include <sstream>

#include "app.hpp"
#include "scalecalc/expansion.hpp"
#include "scalecalc/io.hpp"
#include "scalecalc/local_fractional.hpp"
#include "scalecalc/quantize.hpp"
#include "scalecalc/quantum_algebra.hpp"
#include "scalecalc/scale_laws.hpp"
#include "scalecalc/scale_ops.hpp"

namespace scalecalc::cli {

namespace {

template <class T>
const T& require(const std::optional<T>& v, const char* key, const Manifest& m) {
  if (!v) throw ValidationError(key, "is required for " + m.command);
  return *v;
}

SampledPath generate(const GeneratorSpec& g) {
  if (g.name == "takagi") {
    const int terms = g.n_terms > 0 ? g.n_terms : takagi_terms_for(g.alpha, g.grid.dt);
    return gen_takagi(g.alpha, terms, g.grid);
  }
  if (g.name == "affine") return gen_affine_ifs(g.affine, g.grid);
  if (g.name == "principal") return gen_principal_schrodinger(g.principal, g.grid);
  return sample(g.grid, [&](double t) {
    double r = 0.0;
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) r = r * t + *it;
    return r;
  });
}

SampledPath load_path(const Manifest& m) {
  if (m.input) return io::read_sampled_csv(*m.input);
  if (m.generator) return generate(*m.generator);
  throw ValidationError("input", "input or generator is required for " + m.command);
}

std::vector<double> widths(const std::optional<std::vector<double>>& list, const std::optional<json>& range,
                           const char* key, double dt, std::vector<double> fallback) {
  if (list) return *list;
  if (range) {
    std::vector<double> w = dyadic_widths(dt, (*range)["min"].get<double>(), (*range)["max"].get<double>());
    if (w.empty()) throw ValidationError(key, "range contains no dyadic grid widths");
    return w;
  }
  return fallback;
}

template <class P>
std::string csv_of(const P& p) {
  std::ostringstream os;
  io::write_csv(os, p);
  return os.str();
}

SmoothField make_field(const Manifest& m) {
  SmoothField f;
  if (m.field == "t") {
    f = SmoothField::time();
  } else if (m.field == "sin") {
    f = SmoothField::sine(m.n);
  } else if (m.field == "exp_sin") {
    f = SmoothField::exp_x_sin_t(m.n);
  } else {
    const int power = m.field == "x" ? 1 : m.field[2] - '0';
    f = SmoothField::monomial(power, m.n);
  }
  f.validate(m.seed);
  return f;
}

CommandResult cmd_gen(const Manifest& m) {
  const SampledPath f = generate(require(m.generator, "generator", m));
  return {{{"samples", f.size()}, {"t0", f.t0()}, {"dt", f.dt()}}, csv_of(f), std::nullopt, std::nullopt};
}

CommandResult cmd_deriv(const Manifest& m) {
  const SampledPath f = load_path(m);
  const double eps = require(m.eps, "eps", m);
  CommandResult r;
  if (m.op == "scale" || m.op == "velocity") {
    const ComplexPath d = m.op == "scale" ? scale_derivative(f, eps) : complex_velocity(f, eps);
    r.csv = csv_of(d);
    r.summary = {{"samples", d.size()}, {"op", m.op}};
  } else {
    const SampledPath d = m.op == "defect" ? nondiff_defect(f, eps)
                                           : quantum_diff(f, eps, m.op == "plus" ? Side::Forward : Side::Backward);
    r.csv = csv_of(d);
    r.summary = {{"samples", d.size()}, {"op", m.op}};
  }
  return r;
}

CommandResult cmd_minres(const Manifest& m) {
  const SampledPath f = load_path(m);
  MinimalResolutionOptions opts;
  opts.eps_max = m.eps_max;
  const MinimalResolution res = minimal_resolution(f, require(m.h, "h", m), opts);
  json result = io::to_json(res);
  json summary = {{"global", io::to_json(res.global)}, {"at_grid_floor", res.at_grid_floor()}};
  if (m.alpha) {
    const double norm = holder_norm_estimate(f, *m.alpha);
    result["holder_norm"] = norm;
    summary["holder_norm"] = norm;
    if (norm > 0.0) {
      result["holder_bound"] = holder_resolution_bound(res.h, norm, *m.alpha);
      summary["holder_bound"] = result["holder_bound"];
    }
  }
  return {summary, std::nullopt, result, std::nullopt};
}

CommandResult cmd_scalelaw(const Manifest& m) {
  const SampledPath f = load_path(m);
  const ScaleLawFit fit =
      fit_holder_exponent(f, widths(m.eps_sweep, m.eps_sweep_range, "eps_sweep", f.dt(), default_fit_widths(f)));
  std::string sweep = "log_eps,log_length\n";
  for (std::size_t i = 0; i < fit.eps.size(); ++i) {
    sweep += io::format_double(std::log(fit.eps[i])) + ',' + io::format_double(std::log(fit.lengths[i])) + '\n';
  }
  return {{{"alpha_hat", fit.alpha_hat}, {"residual", fit.residual}}, std::nullopt, io::to_json(fit), sweep};
}

CommandResult cmd_dim(const Manifest& m) {
  const SampledPath f = load_path(m);
  std::vector<double> sizes = m.box_sizes ? *m.box_sizes
                                          : widths(m.eps_sweep, m.eps_sweep_range, "eps_sweep", f.dt(), default_fit_widths(f));
  const BoxDimension d = box_counting_dimension(f, sizes);
  return {{{"dimension", d.dimension}, {"residual", d.residual}}, std::nullopt, io::to_json(d), std::nullopt};
}

CommandResult cmd_ito(const Manifest& m) {
  const SampledPath X = load_path(m);
  const SmoothField field = make_field(m);
  CommandResult r;
  r.summary = {{"field", field.name}, {"n", m.n}};
  if (m.eps) {
    const ItoComparison cmp = compare_ito(field, X, *m.eps, m.n);
    std::string csv = "t,re_direct,im_direct,re_expansion,im_expansion\n";
    for (std::size_t i = 0; i < cmp.direct.size(); ++i) {
      csv += io::format_double(cmp.direct.time(i)) + ',' + io::format_double(cmp.direct[i].real()) + ',' +
             io::format_double(cmp.direct[i].imag()) + ',' + io::format_double(cmp.expansion[i].real()) + ',' +
             io::format_double(cmp.expansion[i].imag()) + '\n';
    }
    r.csv = csv;
    r.summary["max_error"] = cmp.max_error;
    r.summary["max_excess"] = cmp.max_excess;
  }
  if (!m.eps || m.eps_sweep || m.eps_sweep_range) {
    std::vector<double> fallback;
    for (int k = 5; k <= 10; ++k) fallback.push_back(std::ldexp(1.0, -k));
    const auto rows = ito_sweep(field, X, widths(m.eps_sweep, m.eps_sweep_range, "eps_sweep", X.dt(), fallback), m.n);
    r.result = json{{"rows", io::to_json(rows)}, {"ratio_non_increasing", ratio_non_increasing(rows)}};
    r.summary["ratio_non_increasing"] = ratio_non_increasing(rows);
  }
  return r;
}

CommandResult cmd_algebra(const Manifest& m) {
  AlgebraCheckOptions opts;
  opts.max_word_len = m.max_word_len;
  opts.trials = m.trials;
  opts.seed = m.seed;
  const AlgebraReport rep = run_algebra_checks(opts);
  json result = io::to_json(rep);
  if (m.series) {
    const WordSeries s = io::word_series_from_json(json::parse(*m.series));
    result["coproduct"] = io::to_json(coproduct(s));
    result["counit"] = io::to_json(counit(s));
  }
  return {{{"max_error", rep.max_error}, {"ok", rep.ok(1e-10)}}, std::nullopt, result, std::nullopt};
}

CommandResult cmd_fracscan(const Manifest& m) {
  const SampledPath f = load_path(m);
  const double alpha = require(m.alpha, "alpha", m);
  FracOptions opts;
  opts.extrapolate = m.extrapolate;
  const SpectrumScan scan = spectrum_scan(f, alpha, require(m.points, "points", m), opts);
  std::string csv = "t,re,im,flag\n";
  for (const auto& row : scan.rows) {
    csv += io::format_double(row.t) + ',' + io::format_double(row.value.real()) + ',' +
           io::format_double(row.value.imag()) + ',' + to_string(row.flag) + '\n';
  }
  return {{{"points", scan.rows.size()},
           {"fraction_zero", scan.fraction_zero},
           {"fraction_divergent", scan.fraction_divergent},
           {"fraction_oscillatory", scan.fraction_oscillatory},
           {"fraction_nonzero", scan.fraction_nonzero}},
          csv,
          std::nullopt,
          std::nullopt};
}

CommandResult cmd_quantize(const Manifest& m) {
  const SampledPath X = load_path(m);
  const QuantizationMap Q{require(m.eps, "eps", m), m.h.value_or(1.0)};
  const DerivativeRule rule = Q.route(X);
  const ClassicalLagrangian L{m.m, m.potential.build()};
  const ComplexPath a = quantize(euler_lagrange(L), rule).residual(X);
  const ComplexPath b = scale_euler_lagrange(quantize(L, rule)).residual(X);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i]));
  const bool coherent = a.size() == b.size() && std::equal(a.values().begin(), a.values().end(), b.values().begin());
  return {{{"mode", rule.mode() == DerivativeRule::Mode::Central ? "central" : "scale"},
           {"max_residual", worst},
           {"coherent", coherent}},
          csv_of(a),
          std::nullopt,
          std::nullopt};
}

WaveField build_wave(const Manifest& m) {
  const WaveSpec& w = require(m.wave, "wave", m);
  WaveField f;
  if (w.kind == "file") {
    f = io::read_wave_csv(w.input);
  } else if (w.kind == "plane") {
    f = plane_wave(w.grid, w.k, w.omega.value_or(m.hbar * w.k * w.k / (2.0 * m.m)), m.m, m.hbar);
  } else {
    f = free_gaussian(w.grid, w.sigma, m.m, m.hbar);
  }
  f.m = m.m;
  f.hbar = m.hbar;
  f.gamma_norm = m.gamma.value_or(m.hbar / (2.0 * m.m));
  return f;
}

CommandResult cmd_gse(const Manifest& m) {
  const WaveField field = build_wave(m);
  const Potential U = m.potential.build();
  ResidualGrid res;
  if (m.equation == "classical") {
    res = classical_schrodinger_residual(field, U);
  } else if (m.equation == "nngse") {
    res = nngse_residual(field, U, m.alpha_c);
  } else {
    ComplexPath a = constant_a_eps(field.grid, field.gamma_norm);
    if (m.a_eps_mode == "measured") {
      a = a_coeffs(load_path(m), require(m.eps, "eps", m), 2);
    } else if (m.a_eps_mode == "file") {
      a = io::read_complex_csv(*m.a_eps_input);
    }
    GseOptions opts;
    opts.form = m.gse_form == "per_psi" ? GseForm::PerPsi : GseForm::Wave;
    const double ag = m.alpha_gauge;
    res = gse_residual(field, a, U, [ag](double) { return ag; }, opts);
  }
  return {{{"equation", m.equation}, {"sup_norm", res.sup_norm()}, {"nodes", res.values.size()}}, csv_of(res),
          std::nullopt, std::nullopt};
}

CommandResult cmd_schrod(const Manifest& m) {
  const SampledPath X = load_path(m);
  std::optional<double> eps = m.eps;
  if (!eps && m.generator && m.generator->name == "principal") eps = m.generator->principal.eps;
  const ConditionReport rep = schrodinger_condition_check(X, require(eps, "eps", m), m.hbar, m.m, m.tol);
  return {{{"verdict", rep.verdict}, {"max_side_gap", rep.max_side_gap}, {"max_square_gap", rep.max_square_gap}},
          std::nullopt, io::to_json(rep), std::nullopt};
}

CommandResult cmd_heisenberg(const Manifest& m) {
  const SampledPath X = load_path(m);
  const HeisenbergFit fit =
      heisenberg_scaling_check(X, widths(m.dt_sweep, m.dt_sweep_range, "dt_sweep", X.dt(), default_heisenberg_lags(X)));
  return {{{"exponent", fit.exponent}, {"residual", fit.residual}}, std::nullopt, io::to_json(fit), std::nullopt};
}

}  // namespace

CommandResult run_command(const Manifest& m) {
  CommandResult r;
  if (m.command == "gen") r = cmd_gen(m);
  else if (m.command == "deriv") r = cmd_deriv(m);
  else if (m.command == "minres") r = cmd_minres(m);
  else if (m.command == "scalelaw") r = cmd_scalelaw(m);
  else if (m.command == "dim") r = cmd_dim(m);
  else if (m.command == "ito-check") r = cmd_ito(m);
  else if (m.command == "algebra-check") r = cmd_algebra(m);
  else if (m.command == "fracscan") r = cmd_fracscan(m);
  else if (m.command == "quantize") r = cmd_quantize(m);
  else if (m.command == "gse-residual") r = cmd_gse(m);
  else if (m.command == "schrod-check") r = cmd_schrod(m);
  else if (m.command == "heisenberg") r = cmd_heisenberg(m);
  else throw ValidationError("command", "unknown command " + m.command);
  r.summary["command"] = m.command;
  return r;
}

}  // namespace scalecalc::cli
