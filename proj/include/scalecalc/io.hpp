#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "scalecalc/expansion.hpp"
#include "scalecalc/local_fractional.hpp"
#include "scalecalc/paths.hpp"
#include "scalecalc/quantize.hpp"
#include "scalecalc/quantum_algebra.hpp"
#include "scalecalc/scale_laws.hpp"
#include "scalecalc/scale_ops.hpp"

namespace scalecalc::io {

using nlohmann::json;

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

// CSV: `t,value` for real paths, `t,re,im` for complex paths, `x,t,re,im` for wave fields.
void write_csv(std::ostream& os, const SampledPath& f);
void write_csv(std::ostream& os, const ComplexPath& f);
void write_csv(std::ostream& os, const WaveField& f);
void write_csv(std::ostream& os, const ResidualGrid& r);

/// Readers check the header and the uniformity of the grid; errors are ParameterError.
SampledPath read_sampled_csv(std::istream& is);
ComplexPath read_complex_csv(std::istream& is);
WaveField read_wave_csv(std::istream& is);

SampledPath read_sampled_csv(const std::filesystem::path& path);
ComplexPath read_complex_csv(const std::filesystem::path& path);
WaveField read_wave_csv(const std::filesystem::path& path);

/// Writes to a temporary file next to `path` and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

json to_json(const Resolution& r);
json to_json(const MinimalResolution& r);
json to_json(const ScaleLawFit& fit);
json to_json(const BoxDimension& dim);
json to_json(const WeakScaleExponents& w);
json to_json(const Poly& p);
json to_json(const WordSeries& s);
json to_json(const TensorSeries& t);
json to_json(const AlgebraReport& r);
json to_json(const FracEstimate& e);
json to_json(const ConditionReport& r);
json to_json(const HeisenbergFit& fit);
json to_json(const std::vector<ItoSweepRow>& rows);

/// Inverse of to_json(WordSeries): {"+-": [c0, c1, ...], ...}.
WordSeries word_series_from_json(const json& j);

}  // namespace scalecalc::io
