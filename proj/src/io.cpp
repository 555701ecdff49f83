#include "scalecalc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <unistd.h>

namespace scalecalc::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s, std::size_t line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParameterError("line " + std::to_string(line) + ": not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Rows of numbers after the expected header.
std::vector<std::vector<double>> read_table(std::istream& is, std::string_view header) {
  std::string line;
  if (!std::getline(is, line)) throw ParameterError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw ParameterError("expected CSV header '" + std::string(header) + "', got '" + line + "'");
  const std::size_t cols = split(header).size();
  std::vector<std::vector<double>> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto fields = split(line);
    if (fields.size() != cols) throw ParameterError("line " + std::to_string(lineno) + ": wrong number of fields");
    std::vector<double> row;
    row.reserve(cols);
    for (auto f : fields) row.push_back(parse_double(f, lineno));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParameterError("CSV has no data rows");
  return rows;
}

// Grid (t0, dt) reproducing the listed times; prefers a step that regenerates them exactly.
std::pair<double, double> infer_grid(const std::vector<double>& t) {
  const double t0 = t.front();
  if (t.size() == 1) return {t0, 1.0};
  const double n1 = static_cast<double>(t.size() - 1);
  const double candidates[2] = {(t.back() - t0) / n1, t[1] - t0};
  for (double dt : candidates) {
    bool exact = dt > 0.0;
    for (std::size_t i = 0; exact && i < t.size(); ++i) exact = t0 + static_cast<double>(i) * dt == t[i];
    if (exact) return {t0, dt};
  }
  const double dt = candidates[0];
  if (!(dt > 0.0)) throw ParameterError("CSV times must increase");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(t0 + static_cast<double>(i) * dt - t[i]) > 1e-9 * dt) throw GridError("CSV grid is not uniform");
  }
  return {t0, dt};
}

template <class F>
auto with_file(const std::filesystem::path& path, F&& reader) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot open " + path.string());
  return reader(is);
}

}  // namespace

void write_csv(std::ostream& os, const SampledPath& f) {
  std::string out = "t,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) out += format_double(f.time(i)) + ',' + format_double(f[i]) + '\n';
  os << out;
}

void write_csv(std::ostream& os, const ComplexPath& f) {
  std::string out = "t,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += format_double(f.time(i)) + ',' + format_double(f[i].real()) + ',' + format_double(f[i].imag()) + '\n';
  }
  os << out;
}

void write_csv(std::ostream& os, const WaveField& f) {
  std::string out = "x,t,re,im\n";
  for (std::size_t k = 0; k < f.grid.nt; ++k) {
    for (std::size_t j = 0; j < f.grid.nx; ++j) {
      const Complex z = f.at(j, k);
      out += format_double(f.grid.x(j)) + ',' + format_double(f.grid.t(k)) + ',' + format_double(z.real()) + ',' +
             format_double(z.imag()) + '\n';
    }
  }
  os << out;
}

void write_csv(std::ostream& os, const ResidualGrid& r) {
  std::string out = "x,t,re,im\n";
  for (std::size_t k = 0; k < r.nt; ++k) {
    for (std::size_t j = 0; j < r.nx; ++j) {
      const Complex z = r.values[k * r.nx + j];
      out += format_double(r.x0 + static_cast<double>(j) * r.dx) + ',' +
             format_double(r.t0 + static_cast<double>(k) * r.dtt) + ',' + format_double(z.real()) + ',' +
             format_double(z.imag()) + '\n';
    }
  }
  os << out;
}

SampledPath read_sampled_csv(std::istream& is) {
  const auto rows = read_table(is, "t,value");
  std::vector<double> t, v;
  for (const auto& r : rows) {
    t.push_back(r[0]);
    v.push_back(r[1]);
  }
  const auto [t0, dt] = infer_grid(t);
  return SampledPath(t0, dt, std::move(v));
}

ComplexPath read_complex_csv(std::istream& is) {
  const auto rows = read_table(is, "t,re,im");
  std::vector<double> t;
  std::vector<Complex> v;
  for (const auto& r : rows) {
    t.push_back(r[0]);
    v.emplace_back(r[1], r[2]);
  }
  const auto [t0, dt] = infer_grid(t);
  return ComplexPath(t0, dt, std::move(v));
}

WaveField read_wave_csv(std::istream& is) {
  const auto rows = read_table(is, "x,t,re,im");
  // Rows are x-fastest: the x-grid is the leading run with equal t.
  std::size_t nx = 1;
  while (nx < rows.size() && rows[nx][1] == rows[0][1]) ++nx;
  if (rows.size() % nx != 0) throw ParameterError("wave CSV is not a full x-t grid");
  const std::size_t nt = rows.size() / nx;
  std::vector<double> xs, ts;
  for (std::size_t j = 0; j < nx; ++j) xs.push_back(rows[j][0]);
  for (std::size_t k = 0; k < nt; ++k) ts.push_back(rows[k * nx][1]);
  const auto [x0, dx] = infer_grid(xs);
  const auto [t0, dtt] = infer_grid(ts);
  WaveField f;
  f.grid = {x0, dx, nx, t0, dtt, nt};
  f.psi.reserve(rows.size());
  for (std::size_t k = 0; k < nt; ++k) {
    for (std::size_t j = 0; j < nx; ++j) {
      const auto& r = rows[k * nx + j];
      if (r[0] != xs[j] || r[1] != ts[k]) throw ParameterError("wave CSV rows are not in x-fastest grid order");
      f.psi.emplace_back(r[2], r[3]);
    }
  }
  return f;
}

SampledPath read_sampled_csv(const std::filesystem::path& path) {
  return with_file(path, [](std::istream& is) { return read_sampled_csv(is); });
}

ComplexPath read_complex_csv(const std::filesystem::path& path) {
  return with_file(path, [](std::istream& is) { return read_complex_csv(is); });
}

WaveField read_wave_csv(const std::filesystem::path& path) {
  return with_file(path, [](std::istream& is) { return read_wave_csv(is); });
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ParameterError("cannot write " + tmp.string());
    os << content;
    os.flush();
    if (!os) throw ParameterError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ParameterError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

json to_json(const Resolution& r) { return r.is_infinite() ? json("inf") : json(r.value()); }

json to_json(const MinimalResolution& r) {
  json per = json::array();
  for (const auto& p : r.per_point) per.push_back(to_json(p));
  return {{"h", r.h},           {"global", to_json(r.global)}, {"eps_max", r.eps_max},
          {"t_first", r.t_first}, {"dt", r.dt},                {"per_point", per}};
}

json to_json(const ScaleLawFit& fit) {
  return {{"alpha_hat", fit.alpha_hat}, {"slope", fit.slope},  {"intercept", fit.intercept},
          {"residual", fit.residual},   {"eps", fit.eps},      {"lengths", fit.lengths}};
}

json to_json(const BoxDimension& dim) {
  return {{"dimension", dim.dimension}, {"residual", dim.residual}, {"sizes", dim.sizes}, {"counts", dim.counts}};
}

json to_json(const WeakScaleExponents& w) {
  return {{"eps", w.eps},
          {"gamma", w.gamma},
          {"beta", w.beta},
          {"gamma_prime", w.gamma_prime},
          {"beta_prime", w.beta_prime}};
}

json to_json(const Poly& p) { return p.coeffs(); }

json to_json(const WordSeries& s) {
  json j = json::object();
  for (const auto& [w, c] : s.terms()) j[w.str()] = to_json(c);
  return j;
}

json to_json(const TensorSeries& t) {
  json j = json::array();
  for (const auto& [k, c] : t.terms()) j.push_back({{"left", k.first.str()}, {"right", k.second.str()}, {"coeffs", to_json(c)}});
  return j;
}

json to_json(const AlgebraReport& r) {
  return {{"max_word_len", r.max_word_len}, {"words_checked", r.words_checked}, {"homomorphism", r.homomorphism},
          {"counit", r.counit},             {"coassociative", r.coassociative}, {"cocommutative", r.cocommutative},
          {"trials", r.trials},             {"max_error", r.max_error}};
}

json to_json(const FracEstimate& e) {
  return {{"t0", e.t0},
          {"alpha", e.alpha},
          {"side", e.side == Side::Forward ? "+" : "-"},
          {"h", e.h},
          {"quotients", e.quotients},
          {"extrapolants", e.extrapolants},
          {"flag", to_string(e.flag)},
          {"value", e.value}};
}

json to_json(const ConditionReport& r) {
  return {{"max_side_gap", r.max_side_gap}, {"max_square_gap", r.max_square_gap}, {"verdict", r.verdict}};
}

json to_json(const HeisenbergFit& fit) {
  return {{"exponent", fit.exponent},
          {"intercept", fit.intercept},
          {"residual", fit.residual},
          {"lags", fit.lags},
          {"chords", fit.chords}};
}

json to_json(const std::vector<ItoSweepRow>& rows) {
  json j = json::array();
  for (const auto& r : rows) {
    j.push_back({{"eps", r.eps}, {"max_error", r.max_error}, {"max_excess", r.max_excess}, {"ratio", r.ratio}});
  }
  return j;
}

WordSeries word_series_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("word series must be a JSON object");
  WordSeries s;
  for (const auto& [word, coeffs] : j.items()) {
    Poly p;
    if (coeffs.is_number()) {
      p = Poly(coeffs.get<double>());
    } else if (coeffs.is_array()) {
      for (std::size_t i = 0; i < coeffs.size(); ++i) p += Poly::monomial(coeffs[i].get<double>(), i);
    } else {
      throw ParameterError("coefficient of '" + word + "' must be a number or a list");
    }
    s.add(Word(word), p);
  }
  return s;
}

}  // namespace scalecalc::io
