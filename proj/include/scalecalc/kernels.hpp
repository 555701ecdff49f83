#pragma once

// Grid kernels shared by the numerical modules. Every kernel exists twice:
// `kernels::serial` is the plain reference loop kept for testing, and
// `kernels::omp` is the OpenMP-parallel version the modules call. Elementwise
// kernels agree bit-for-bit; reductions use a fixed block decomposition so the
// parallel result does not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "scalecalc/paths.hpp"

namespace scalecalc::kernels {

/// Samples per block in deterministic parallel reductions.
inline constexpr std::size_t kReductionBlock = 4096;

enum class GradientForm {
  OverPsi,   // psi * (psi_x / psi)^2, i.e. (psi_x)^2 / psi
  TimesPsi,  // (psi_x)^2 * psi
};

/// Coefficients of one time slice of the generic Schroedinger-type residual
///   time * psi_t + curvature * psi_xx + gradient * G(psi) - V(x) * psi.
struct SliceCoefficients {
  Complex time;
  Complex curvature;
  Complex gradient;
};

/// Row-major view of a complex field psi(x_j, t_k) stored at index k * nx + j.
struct WaveGridView {
  std::span<const Complex> psi;
  std::size_t nx = 0;
  std::size_t nt = 0;
  double dx = 0.0;
  double dtt = 0.0;
};

namespace serial {
// out[i] = (v[i+k] - v[i]) / eps, i in [0, n-k)
void forward_difference(std::span<const double> v, std::size_t k, double eps, std::span<double> out);
// out[i] = |v[i+2k] + v[i] - 2 v[i+k]| / eps, i in [0, n-2k)
void second_difference_defect(std::span<const double> v, std::size_t k, double eps, std::span<double> out);
// complex scale difference centred at i+k, i in [0, n-2k)
void scale_difference(std::span<const double> v, std::size_t k, double eps, std::span<Complex> out);
void scale_difference(std::span<const Complex> v, std::size_t k, double eps, std::span<Complex> out);
// sum of sqrt(eps^2 + (v[(i+1)k] - v[ik])^2) over the (n-1)/k full steps
double segment_length_sum(std::span<const double> v, std::size_t k, double eps);
// boxes of side `box` covering the graph, one column per k samples
std::uint64_t box_count(std::span<const double> v, std::size_t k, double box);
// max |v_j - v_i| / ((j-i) dt)^alpha over all pairs
double holder_ratio_all_pairs(std::span<const double> v, double dt, double alpha);
// same maximum over the listed index pairs
double holder_ratio_pairs(std::span<const double> v, double dt, double alpha, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);
// per centre c in [kmax, n-1-kmax]: smallest k <= kmax with defect < h, 0 if none
void minimal_resolution_steps(std::span<const double> v, double dt, std::size_t kmax, double h, std::span<std::size_t> out);
// mean over i of sqrt((k dt)^2 + (v[i+k] - v[i])^2)
double mean_chord(std::span<const double> v, double dt, std::size_t k);
// residual at interior nodes, out[(k-1)*(nx-2) + (j-1)]
void schrodinger_residual(const WaveGridView& field, std::span<const SliceCoefficients> slices, std::span<const double> potential, GradientForm form, std::span<Complex> out);
}  // namespace serial

namespace omp {
// Same contracts as `serial`.
void forward_difference(std::span<const double> v, std::size_t k, double eps, std::span<double> out);
void second_difference_defect(std::span<const double> v, std::size_t k, double eps, std::span<double> out);
void scale_difference(std::span<const double> v, std::size_t k, double eps, std::span<Complex> out);
void scale_difference(std::span<const Complex> v, std::size_t k, double eps, std::span<Complex> out);
double segment_length_sum(std::span<const double> v, std::size_t k, double eps);
std::uint64_t box_count(std::span<const double> v, std::size_t k, double box);
double holder_ratio_all_pairs(std::span<const double> v, double dt, double alpha);
double holder_ratio_pairs(std::span<const double> v, double dt, double alpha, std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);
void minimal_resolution_steps(std::span<const double> v, double dt, std::size_t kmax, double h, std::span<std::size_t> out);
double mean_chord(std::span<const double> v, double dt, std::size_t k);
void schrodinger_residual(const WaveGridView& field, std::span<const SliceCoefficients> slices, std::span<const double> potential, GradientForm form, std::span<Complex> out);
}  // namespace omp

/// Number of OpenMP worker threads used by the `omp` kernels.
int worker_count();
/// Sets the worker count (values < 1 are ignored).
void set_worker_count(int jobs);

}  // namespace scalecalc::kernels
