#include "manifest.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

namespace scalecalc::cli {

namespace {

// Typed access to one JSON object with field-path error messages.
class Fields {
 public:
  Fields(const json& obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix)) {
    if (!obj_.is_object()) throw ValidationError(prefix_.empty() ? "manifest" : prefix_, "must be an object");
  }

  std::string path(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }
  bool has(const std::string& key) const {
    seen_.insert(key);
    return obj_.contains(key) && !obj_.at(key).is_null();
  }
  const json& raw(const std::string& key) const {
    seen_.insert(key);
    if (!obj_.contains(key) || obj_.at(key).is_null()) throw ValidationError(path(key), "is required");
    return obj_.at(key);
  }

  double number(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_number()) throw ValidationError(path(key), "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError(path(key), "must be finite");
    return d;
  }
  double positive(const std::string& key) const {
    const double d = number(key);
    if (!(d > 0.0)) throw ValidationError(path(key), "must be positive");
    return d;
  }
  std::optional<double> opt_number(const std::string& key) const {
    return has(key) ? std::optional<double>(number(key)) : std::nullopt;
  }
  std::optional<double> opt_positive(const std::string& key) const {
    return has(key) ? std::optional<double>(positive(key)) : std::nullopt;
  }
  long long integer(const std::string& key, long long lo, long long hi) const {
    const json& v = raw(key);
    if (!v.is_number_integer()) throw ValidationError(path(key), "must be an integer");
    const long long i = v.get<long long>();
    if (i < lo || i > hi) {
      throw ValidationError(path(key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return i;
  }
  std::string string(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_string()) throw ValidationError(path(key), "must be a string");
    return v.get<std::string>();
  }
  std::string choice(const std::string& key, const std::vector<std::string>& allowed) const {
    const std::string s = string(key);
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      throw ValidationError(path(key), "must be one of {" + list + "}, got '" + s + "'");
    }
    return s;
  }
  bool boolean(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_boolean()) throw ValidationError(path(key), "must be true or false");
    return v.get<bool>();
  }
  std::vector<double> numbers(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_array()) throw ValidationError(path(key), "must be an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw ValidationError(path(key) + "[" + std::to_string(i) + "]", "must be a number");
      out.push_back(v[i].get<double>());
      if (!std::isfinite(out.back())) throw ValidationError(path(key) + "[" + std::to_string(i) + "]", "must be finite");
    }
    return out;
  }
  Fields object(const std::string& key) const { return Fields(raw(key), path(key)); }

  void reject_unknown() const {
    for (const auto& [k, v] : obj_.items()) {
      if (!seen_.count(k)) throw ValidationError(path(k), "unknown key");
    }
  }

 private:
  const json& obj_;
  std::string prefix_;
  mutable std::set<std::string> seen_;
};

// Positive, strictly sorted (either direction), non-empty.
std::vector<double> sweep_list(const Fields& f, const std::string& key) {
  std::vector<double> v = f.numbers(key);
  if (v.empty()) throw ValidationError(f.path(key), "must not be empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw ValidationError(f.path(key) + "[" + std::to_string(i) + "]", "must be positive");
  }
  const bool up = std::is_sorted(v.begin(), v.end(), std::less_equal<>());
  const bool down = std::is_sorted(v.begin(), v.end(), std::greater_equal<>());
  if (v.size() > 1 && !up && !down) throw ValidationError(f.path(key), "must be sorted");
  if (v.size() > 1 && std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw ValidationError(f.path(key), "must not repeat values");
  }
  return v;
}

// Either a list or {min, max} describing dyadic widths.
void read_sweep(const Fields& f, const std::string& key, std::optional<std::vector<double>>& list,
                std::optional<json>& range) {
  if (!f.has(key)) return;
  const json& v = f.raw(key);
  if (v.is_array()) {
    list = sweep_list(f, key);
  } else if (v.is_object()) {
    const Fields r = f.object(key);
    const double lo = r.positive("min");
    const double hi = r.positive("max");
    r.reject_unknown();
    if (lo > hi) throw ValidationError(f.path(key), "min must not exceed max");
    range = json{{"min", lo}, {"max", hi}};
  } else {
    throw ValidationError(f.path(key), "must be an array or an object {min, max}");
  }
}

GridSpec read_grid(const Fields& g) {
  GridSpec grid;
  grid.t0 = g.has("t0") ? g.number("t0") : 0.0;
  grid.dt = g.has("dt") ? g.positive("dt") : 1.0 / 65536.0;
  if (g.has("length")) {
    grid.length = static_cast<std::size_t>(g.integer("length", 2, 1LL << 26));
  } else {
    const double span = g.has("span") ? g.positive("span") : 1.0;
    const double intervals = std::round(span / grid.dt);
    if (intervals < 1.0 || intervals > static_cast<double>(1LL << 26)) {
      throw ValidationError(g.path("span"), "gives an unusable number of grid intervals");
    }
    grid.length = static_cast<std::size_t>(intervals) + 1;
  }
  return grid;
}

GeneratorSpec read_generator(const Fields& g) {
  GeneratorSpec spec;
  spec.name = g.choice("name", {"takagi", "affine", "principal", "polynomial"});
  spec.grid = read_grid(g);
  if (spec.name == "takagi") {
    spec.alpha = g.number("alpha");
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) throw ValidationError(g.path("alpha"), "must lie in (0, 1)");
    spec.n_terms = g.has("n_terms") ? static_cast<int>(g.integer("n_terms", 1, 1000)) : 0;
  } else if (spec.name == "affine") {
    const json& pts = g.raw("points");
    if (!pts.is_array() || pts.size() < 3) throw ValidationError(g.path("points"), "must list at least 3 [x, y] pairs");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const json& p = pts[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ValidationError(g.path("points") + "[" + std::to_string(i) + "]", "must be a pair [x, y]");
      }
      spec.affine.points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    spec.affine.scaling = g.numbers("scaling");
    spec.affine.iterations = g.has("iterations") ? static_cast<int>(g.integer("iterations", 0, 64)) : 8;
    if (spec.affine.scaling.size() + 1 != spec.affine.points.size()) {
      throw ValidationError(g.path("scaling"), "needs one entry per map (points - 1)");
    }
  } else if (spec.name == "principal") {
    auto& p = spec.principal;
    p.hbar_over_m = g.has("hbar_over_m") ? g.positive("hbar_over_m") : 1.0;
    p.c = g.has("c") ? g.number("c") : 0.0;
    p.sign = g.has("sign") ? static_cast<int>(g.integer("sign", -1, 1)) : 1;
    if (p.sign == 0) throw ValidationError(g.path("sign"), "must be +1 or -1");
    p.eps = g.positive("eps");
    p.perturbation_amplitude = g.has("amplitude") ? g.number("amplitude") : 0.0;
    p.n_terms = g.has("n_terms") ? static_cast<int>(g.integer("n_terms", 1, 1000)) : 0;
  } else {
    spec.coeffs = g.numbers("coeffs");
    if (spec.coeffs.empty()) throw ValidationError(g.path("coeffs"), "must not be empty");
  }
  g.has("seed");  // accepted for every generator; all current generators are deterministic
  g.reject_unknown();
  return spec;
}

WaveSpec read_wave(const Fields& w) {
  WaveSpec spec;
  spec.kind = w.choice("kind", {"plane", "gaussian", "file"});
  if (spec.kind == "file") {
    spec.input = w.string("input");
    if (!std::filesystem::exists(spec.input)) throw ValidationError(w.path("input"), "file does not exist");
  } else {
    spec.grid.x0 = w.number("x0");
    spec.grid.dx = w.positive("dx");
    spec.grid.nx = static_cast<std::size_t>(w.integer("nx", 3, 1 << 16));
    spec.grid.t0 = w.has("t0") ? w.number("t0") : 0.0;
    spec.grid.dtt = w.positive("dtt");
    spec.grid.nt = static_cast<std::size_t>(w.integer("nt", 3, 1 << 16));
    if (spec.grid.nx * spec.grid.nt > (std::size_t{1} << 26)) throw ValidationError(w.path("nx"), "grid too large");
  }
  if (spec.kind == "plane") {
    spec.k = w.number("k");
    spec.omega = w.opt_number("omega");
  }
  if (spec.kind == "gaussian") spec.sigma = w.positive("sigma");
  w.reject_unknown();
  return spec;
}

}  // namespace

Potential PotentialSpec::build() const {
  if (name == "linear") return Potential::linear(param);
  if (name == "harmonic") return Potential::harmonic(param);
  if (name == "constant") return Potential::constant(param);
  return Potential::zero();
}

Manifest parse_manifest(const json& raw) {
  const Fields f(raw, "");
  Manifest m;
  m.command = f.has("command") ? f.choice("command", command_names()) : throw ValidationError("command", "is required");
  if (f.has("input")) {
    m.input = f.string("input");
    if (!std::filesystem::exists(*m.input)) throw ValidationError("input", "file does not exist: " + *m.input);
  }
  if (f.has("generator")) m.generator = read_generator(f.object("generator"));
  if (m.input && m.generator) throw ValidationError("input", "give either input or generator, not both");
  m.eps = f.opt_positive("eps");
  m.h = f.opt_positive("h");
  m.eps_max = f.opt_positive("eps_max");
  if (f.has("alpha")) {
    m.alpha = f.number("alpha");
    if (!(*m.alpha > 0.0 && *m.alpha < 1.0)) throw ValidationError("alpha", "must lie in (0, 1)");
  }
  if (f.has("gamma")) {
    m.gamma = f.number("gamma");
    if (*m.gamma == 0.0) throw ValidationError("gamma", "must be nonzero");
  }
  if (f.has("alpha_gauge")) m.alpha_gauge = f.number("alpha_gauge");
  if (f.has("hbar")) m.hbar = f.positive("hbar");
  if (f.has("m")) m.m = f.positive("m");
  if (f.has("n")) m.n = static_cast<int>(f.integer("n", 1, 16));
  if (f.has("field")) m.field = f.choice("field", {"x", "x^2", "x^3", "x^4", "t", "sin", "exp_sin"});
  if (f.has("op")) m.op = f.choice("op", {"scale", "plus", "minus", "defect", "velocity"});
  read_sweep(f, "eps_sweep", m.eps_sweep, m.eps_sweep_range);
  read_sweep(f, "dt_sweep", m.dt_sweep, m.dt_sweep_range);
  if (f.has("box_sizes")) m.box_sizes = sweep_list(f, "box_sizes");
  if (f.has("points")) {
    m.points = f.numbers("points");
    if (m.points->empty()) throw ValidationError("points", "must not be empty");
  }
  if (f.has("max_word_len")) m.max_word_len = static_cast<std::size_t>(f.integer("max_word_len", 1, 6));
  if (f.has("trials")) m.trials = static_cast<std::size_t>(f.integer("trials", 0, 1000000));
  if (f.has("seed")) m.seed = static_cast<std::uint64_t>(f.integer("seed", 0, (1LL << 62)));
  if (f.has("potential")) {
    const Fields p = f.object("potential");
    m.potential.name = p.choice("name", {"zero", "linear", "harmonic", "constant"});
    if (p.has("params")) {
      const std::vector<double> params = p.numbers("params");
      if (params.size() > 1) throw ValidationError(p.path("params"), "takes at most one parameter");
      if (!params.empty()) m.potential.param = params[0];
    }
    p.reject_unknown();
  }
  if (f.has("a_eps_mode")) m.a_eps_mode = f.choice("a_eps_mode", {"measured", "constant", "file"});
  if (f.has("a_eps_input")) {
    m.a_eps_input = f.string("a_eps_input");
    if (!std::filesystem::exists(*m.a_eps_input)) throw ValidationError("a_eps_input", "file does not exist");
  }
  if (m.a_eps_mode == "file" && !m.a_eps_input) throw ValidationError("a_eps_input", "is required when a_eps_mode is file");
  if (f.has("equation")) m.equation = f.choice("equation", {"gse", "classical", "nngse"});
  if (f.has("alpha_c")) {
    const Fields a = f.object("alpha_c");
    m.alpha_c = Complex(a.number("re"), a.has("im") ? a.number("im") : 0.0);
    a.reject_unknown();
  }
  if (f.has("gse_form")) m.gse_form = f.choice("gse_form", {"wave", "per_psi"});
  if (f.has("wave")) m.wave = read_wave(f.object("wave"));
  if (f.has("series")) m.series = f.raw("series").dump();
  if (f.has("extrapolate")) m.extrapolate = f.boolean("extrapolate");
  if (f.has("out")) m.out = f.string("out");
  if (f.has("json_out")) m.json_out = f.string("json_out");
  if (f.has("sweep_csv")) m.sweep_csv = f.string("sweep_csv");
  for (const auto& [key, value] : {std::pair{"out", &m.out}, {"json_out", &m.json_out}, {"sweep_csv", &m.sweep_csv}}) {
    if (!*value) continue;
    const std::filesystem::path dir = std::filesystem::absolute(**value).parent_path();
    if (!std::filesystem::is_directory(dir)) throw ValidationError(key, "directory does not exist: " + dir.string());
  }
  if (f.has("tol")) m.tol = f.positive("tol");
  if (f.has("jobs")) m.jobs = static_cast<int>(f.integer("jobs", 1, 1024));
  f.reject_unknown();
  return m;
}

}  // namespace scalecalc::cli
