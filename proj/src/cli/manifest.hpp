#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scalecalc/core_paths.hpp"
#include "scalecalc/quantize.hpp"

namespace scalecalc::cli {

using nlohmann::json;

/// Schema violation; the message starts with the offending field path.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& path, const std::string& what) : std::runtime_error(path + ": " + what) {}
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"gen",          "deriv",         "minres",   "scalelaw",
                                                 "dim",          "ito-check",     "algebra-check", "fracscan",
                                                 "quantize",     "gse-residual",  "schrod-check",  "heisenberg"};
  return names;
}

struct GeneratorSpec {
  std::string name;  // takagi | affine | principal | polynomial
  GridSpec grid;
  double alpha = 0.5;
  int n_terms = 0;
  AffineSystem affine;
  PrincipalPathSpec principal;
  std::vector<double> coeffs;
};

struct WaveSpec {
  std::string kind;  // plane | gaussian | file
  WaveGrid grid;
  double k = 1.0;
  std::optional<double> omega;
  double sigma = 1.0;
  std::string input;
};

struct PotentialSpec {
  std::string name = "zero";  // zero | linear | harmonic | constant
  double param = 0.0;
  Potential build() const;
};

/// Validated manifest. Optional fields are checked by the command that needs them.
struct Manifest {
  std::string command;
  std::optional<std::string> input;
  std::optional<GeneratorSpec> generator;
  std::optional<double> eps;
  std::optional<double> h;
  std::optional<double> alpha;
  std::optional<double> eps_max;
  /// Defaults to hbar / (2 m) where a wave field needs it.
  std::optional<double> gamma;
  double alpha_gauge = 0.0;
  double hbar = 1.0;
  double m = 1.0;
  int n = 2;
  std::string field = "x^2";
  std::string op = "scale";
  std::optional<std::vector<double>> eps_sweep;
  std::optional<json> eps_sweep_range;
  std::optional<std::vector<double>> dt_sweep;
  std::optional<json> dt_sweep_range;
  std::optional<std::vector<double>> box_sizes;
  std::optional<std::vector<double>> points;
  std::size_t max_word_len = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  PotentialSpec potential;
  std::string a_eps_mode = "constant";  // measured | constant | file
  std::optional<std::string> a_eps_input;
  std::string equation = "gse";  // gse | classical | nngse
  Complex alpha_c{1.0, 0.0};
  std::string gse_form = "wave";
  std::optional<WaveSpec> wave;
  std::optional<std::string> series;
  bool extrapolate = true;
  std::optional<std::string> out;
  std::optional<std::string> json_out;
  std::optional<std::string> sweep_csv;
  double tol = 1e-12;
  std::optional<int> jobs;
};

/// Validates a raw JSON manifest; unknown keys are rejected.
Manifest parse_manifest(const json& raw);

}  // namespace scalecalc::cli
