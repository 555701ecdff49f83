#include "app.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "scalecalc/error.hpp"
#include "scalecalc/io.hpp"
#include "scalecalc/kernels.hpp"

namespace scalecalc::cli {

namespace {

enum class Kind { Number, Integer, Text, NumberList, Json };

struct FlagSpec {
  const char* flag;
  std::vector<std::string> key;
  Kind kind;
  const char* help;
};

const std::vector<FlagSpec>& flag_specs() {
  static const std::vector<FlagSpec> specs = {
      {"--input", {"input"}, Kind::Text, "input CSV path"},
      {"--out", {"out"}, Kind::Text, "CSV output path (default: stdout)"},
      {"--json-out", {"json_out"}, Kind::Text, "JSON result path"},
      {"--sweep-csv", {"sweep_csv"}, Kind::Text, "sweep table path"},
      {"--eps", {"eps"}, Kind::Number, "resolution"},
      {"--h", {"h"}, Kind::Number, "defect threshold"},
      {"--alpha", {"alpha"}, Kind::Number, "Hoelder exponent"},
      {"--eps-max", {"eps_max"}, Kind::Number, "largest searched resolution"},
      {"--gamma", {"gamma"}, Kind::Number, "gamma normalisation"},
      {"--alpha-gauge", {"alpha_gauge"}, Kind::Number, "constant gauge alpha"},
      {"--hbar", {"hbar"}, Kind::Number, "hbar"},
      {"--m", {"m"}, Kind::Number, "mass"},
      {"--n", {"n"}, Kind::Integer, "expansion order"},
      {"--field", {"field"}, Kind::Text, "x | x^2 | x^3 | x^4 | t | sin | exp_sin"},
      {"--op", {"op"}, Kind::Text, "scale | plus | minus | defect | velocity"},
      {"--eps-sweep", {"eps_sweep"}, Kind::NumberList, "resolutions"},
      {"--dt-sweep", {"dt_sweep"}, Kind::NumberList, "lags"},
      {"--box-sizes", {"box_sizes"}, Kind::NumberList, "box widths"},
      {"--points", {"points"}, Kind::NumberList, "evaluation times"},
      {"--max-word-len", {"max_word_len"}, Kind::Integer, "longest word checked"},
      {"--trials", {"trials"}, Kind::Integer, "random trials"},
      {"--seed", {"seed"}, Kind::Integer, "RNG seed"},
      {"--tol", {"tol"}, Kind::Number, "tolerance"},
      {"--jobs", {"jobs"}, Kind::Integer, "worker threads"},
      {"--a-eps-mode", {"a_eps_mode"}, Kind::Text, "measured | constant | file"},
      {"--a-eps-input", {"a_eps_input"}, Kind::Text, "a_eps CSV path"},
      {"--equation", {"equation"}, Kind::Text, "gse | classical | nngse"},
      {"--gse-form", {"gse_form"}, Kind::Text, "wave | per_psi"},
      {"--series", {"series"}, Kind::Json, "word series as JSON"},
      {"--potential", {"potential", "name"}, Kind::Text, "zero | linear | harmonic | constant"},
      {"--potential-param", {"potential", "params"}, Kind::NumberList, "potential parameter"},
      {"--gen", {"generator", "name"}, Kind::Text, "takagi | affine | principal | polynomial"},
      {"--gen-alpha", {"generator", "alpha"}, Kind::Number, "generator exponent"},
      {"--gen-n-terms", {"generator", "n_terms"}, Kind::Integer, "series terms"},
      {"--gen-t0", {"generator", "t0"}, Kind::Number, "grid origin"},
      {"--gen-dt", {"generator", "dt"}, Kind::Number, "grid step"},
      {"--gen-span", {"generator", "span"}, Kind::Number, "grid span"},
      {"--gen-length", {"generator", "length"}, Kind::Integer, "grid points"},
      {"--gen-eps", {"generator", "eps"}, Kind::Number, "principal path resolution"},
      {"--gen-hbar-over-m", {"generator", "hbar_over_m"}, Kind::Number, "principal path hbar/m"},
      {"--gen-c", {"generator", "c"}, Kind::Number, "principal path offset"},
      {"--gen-sign", {"generator", "sign"}, Kind::Integer, "principal path sign"},
      {"--gen-amplitude", {"generator", "amplitude"}, Kind::Number, "perturbation amplitude"},
      {"--gen-coeffs", {"generator", "coeffs"}, Kind::NumberList, "polynomial coefficients"},
  };
  return specs;
}

double parse_number(const std::string& flag, const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError(flag, "expects a number, got '" + s + "'");
  return v;
}

long long parse_integer(const std::string& flag, const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError(flag, "expects an integer, got '" + s + "'");
  return v;
}

json flag_value(const FlagSpec& spec, const std::vector<std::string>& raw) {
  switch (spec.kind) {
    case Kind::Number:
      return parse_number(spec.flag, raw.back());
    case Kind::Integer:
      return parse_integer(spec.flag, raw.back());
    case Kind::Text:
      return raw.back();
    case Kind::Json: {
      json j = json::parse(raw.back(), nullptr, false);
      if (j.is_discarded()) throw ValidationError(spec.flag, "is not valid JSON");
      return j;
    }
    case Kind::NumberList: {
      json list = json::array();
      for (const auto& item : raw) {
        std::size_t start = 0;
        while (start <= item.size()) {
          const std::size_t comma = std::min(item.find(',', start), item.size());
          list.push_back(parse_number(spec.flag, item.substr(start, comma - start)));
          start = comma + 1;
        }
      }
      return list;
    }
  }
  return {};
}

json load_manifest_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("manifest", "cannot open " + path);
  json j = json::parse(is, nullptr, false);
  if (j.is_discarded()) throw ValidationError("manifest", "is not valid JSON");
  if (!j.is_object()) throw ValidationError("manifest", "must be a JSON object");
  return j;
}

void apply_jobs(const Manifest& m) {
  if (m.jobs) {
    kernels::set_worker_count(*m.jobs);
    return;
  }
  if (const char* env = std::getenv("SCALECALC_JOBS")) {
    const long long jobs = parse_integer("SCALECALC_JOBS", env);
    if (jobs < 1) throw ValidationError("SCALECALC_JOBS", "must be a positive integer");
    kernels::set_worker_count(static_cast<int>(jobs));
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scale calculus toolkit"};
  app.set_help_flag("--help", "print this help");
  std::string command;
  std::string manifest_path;
  bool no_extrapolate = false;
  std::string names;
  for (const auto& n : command_names()) names += (names.empty() ? "" : " | ") + n;
  app.add_option("command", command, names);
  app.add_option("--manifest", manifest_path, "JSON manifest; flags override its keys");
  app.add_flag("--no-extrapolate", no_extrapolate, "report raw fractional quotients");
  std::map<std::string, std::vector<std::string>> raw;
  for (const auto& spec : flag_specs()) {
    auto* opt = app.add_option(spec.flag, raw[spec.flag], spec.help);
    if (spec.kind != Kind::NumberList) opt->expected(1);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "scalecalc: " << e.what() << '\n';
    return 2;
  }

  try {
    json doc = manifest_path.empty() ? json::object() : load_manifest_file(manifest_path);
    if (!command.empty()) doc["command"] = command;
    if (no_extrapolate) doc["extrapolate"] = false;
    for (const auto& spec : flag_specs()) {
      const auto& values = raw[spec.flag];
      if (values.empty()) continue;
      json* slot = &doc;
      for (const auto& k : spec.key) slot = &(*slot)[k];
      *slot = flag_value(spec, values);
    }
    const Manifest m = parse_manifest(doc);
    apply_jobs(m);

    const CommandResult r = run_command(m);
    json summary = r.summary;
    summary["status"] = "ok";
    bool csv_on_stdout = false;
    if (r.csv) {
      if (m.out) {
        io::write_file_atomic(*m.out, *r.csv);
        summary["out"] = *m.out;
      } else {
        out << *r.csv;
        csv_on_stdout = true;
      }
    }
    if (r.result) {
      if (m.json_out) {
        io::write_file_atomic(*m.json_out, r.result->dump(2) + "\n");
        summary["json_out"] = *m.json_out;
      } else {
        summary["result"] = *r.result;
      }
    }
    if (r.sweep_csv && m.sweep_csv) {
      io::write_file_atomic(*m.sweep_csv, *r.sweep_csv);
      summary["sweep_csv"] = *m.sweep_csv;
    }
    (csv_on_stdout ? err : out) << summary.dump() << '\n';
    return 0;
  } catch (const ValidationError& e) {
    err << "scalecalc: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "scalecalc: manifest: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "scalecalc: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "scalecalc: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace scalecalc::cli
