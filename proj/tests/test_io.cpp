#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "scalecalc/core_paths.hpp"
#include "scalecalc/io.hpp"
#include "scalecalc/quantize.hpp"
#include "scalecalc/scale_ops.hpp"

using namespace scalecalc;

TEST(Csv, SampledRoundTrip) {
  const auto grid = oracle::dyadic_grid(-0.5, 2.0, 10);
  const SampledPath f = gen_takagi(0.5, 20, grid);
  std::stringstream ss;
  io::write_csv(ss, f);
  const SampledPath g = io::read_sampled_csv(ss);
  ASSERT_EQ(g.size(), f.size());
  EXPECT_EQ(g.dt(), f.dt());
  EXPECT_EQ(g.t0(), f.t0());
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g[i], f[i]);
}

TEST(Csv, NonDyadicStep) {
  const SampledPath f = sample(GridSpec{0.1, 0.001, 501}, [](double t) { return std::sin(t); });
  std::stringstream ss;
  io::write_csv(ss, f);
  const SampledPath g = io::read_sampled_csv(ss);
  EXPECT_NEAR(g.dt(), 0.001, 1e-15);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g[i], f[i]);
}

TEST(Csv, ComplexRoundTrip) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 8), [](double t) { return std::exp(t); });
  const ComplexPath d = scale_derivative(f, 0.03125);
  std::stringstream ss;
  io::write_csv(ss, d);
  const ComplexPath e = io::read_complex_csv(ss);
  ASSERT_EQ(e.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(e[i], d[i]);
}

TEST(Csv, WaveRoundTrip) {
  const WaveField w = free_gaussian(WaveGrid{-2.0, 0.125, 33, 0.0, 0.01, 5}, 1.0, 1.0, 1.0);
  std::stringstream ss;
  io::write_csv(ss, w);
  const WaveField v = io::read_wave_csv(ss);
  EXPECT_EQ(v.grid.nx, w.grid.nx);
  EXPECT_EQ(v.grid.nt, w.grid.nt);
  EXPECT_EQ(v.psi, w.psi);
}

TEST(Csv, Malformed) {
  std::stringstream bad_header("x,y\n0,1\n");
  EXPECT_THROW(io::read_sampled_csv(bad_header), ParameterError);
  std::stringstream ragged("t,value\n0,1\n0.1\n");
  EXPECT_THROW(io::read_sampled_csv(ragged), ParameterError);
  std::stringstream uneven("t,value\n0,1\n0.1,2\n0.3,3\n");
  EXPECT_THROW(io::read_sampled_csv(uneven), GridError);
}

TEST(Atomic, WritesAndReplaces) {
  const auto dir = std::filesystem::temp_directory_path() / "scalecalc_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  io::write_file_atomic(path, "first\n");
  io::write_file_atomic(path, "second\n");
  std::ifstream is(path);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "second");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
}

TEST(Json, WordSeriesRoundTrip) {
  WordSeries s(Word("+-"), Poly(1.0) + Poly::monomial(2.0, 1));
  s.add(Word(""), Poly(3.0));
  EXPECT_EQ(io::word_series_from_json(io::to_json(s)), s);
}

TEST(Json, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) EXPECT_EQ(std::stod(io::format_double(v)), v);
}
