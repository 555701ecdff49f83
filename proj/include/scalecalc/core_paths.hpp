#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "scalecalc/paths.hpp"

namespace scalecalc {

// ---------------------------------------------------------------------------
// Takagi (Knopp) function

/// Period-1 tent map: 2s on [0, 1/2], 2 - 2s on [1/2, 1].
double tent(double t);

/// Partial sum sum_{n < n_terms} 2^{-n alpha} tent(2^n t) at one point.
double takagi_value(double alpha, int n_terms, double t);

/// Smallest term count with 2^{-n alpha} < dt, so truncation stays below grid resolution.
int takagi_terms_for(double alpha, double dt);

/// Samples the Takagi partial sum on `grid`. Requires 0 < alpha < 1 and n_terms >= 1.
SampledPath gen_takagi(double alpha, int n_terms, const GridSpec& grid);

// ---------------------------------------------------------------------------
// Fractal interpolation by affine systems

/// Interpolation points A_1..A_{N+1} with strictly increasing abscissae and one
/// vertical scaling d_i per map. Map i sends the segment A_1 A_{N+1} onto A_i A_{i+1}:
///   F_i(x, y) = (a_i x + e_i, c_i x + d_i y + f_i).
struct AffineSystem {
  std::vector<std::pair<double, double>> points;
  std::vector<double> scaling;
  int iterations = 8;

  /// Throws ParameterError for malformed input, ContractionError when some |d_i| >= 1.
  void validate() const;
};

/// One affine map of the system in the (x, y) -> (a x + e, c x + d y + f) form.
struct AffineMap {
  double a, e, c, d, f;
};

std::vector<AffineMap> affine_maps(const AffineSystem& system);

/// Value of the n-th iterate z_n at x (z_0 is the segment A_1 A_{N+1}).
double affine_iterate_value(const AffineSystem& system, const std::vector<AffineMap>& maps, int n, double x);

/// Samples z_{iterations} on the grid; the grid must lie inside [x_1, x_{N+1}].
SampledPath gen_affine_ifs(const AffineSystem& system, const GridSpec& grid);

// ---------------------------------------------------------------------------
// Smoothed representations

enum class KernelKind { BoxCentral, BoxForward, BoxBackward, Gaussian };

/// Conventional: weights sum to one. HalfOneSided: the one-sided box means carry
/// the 1/(2 eps) prefactor over an interval of length eps, i.e. half the average.
enum class Normalization { Conventional, HalfOneSided };

struct KernelSpec {
  KernelKind kind = KernelKind::BoxCentral;
  double width = 0.0;
  Normalization normalization = Normalization::Conventional;
};

/// Discrete weights of the kernel on offsets [lo, hi] (in grid steps).
struct DiscreteKernel {
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = 0;
  std::vector<double> weights;
};

DiscreteKernel discretize(const KernelSpec& kernel, double dt);

/// Convolution of f with the kernel on the sub-grid where the stencil fits.
/// Box kernels integrate with composite Newton-Cotes weights exact for cubics.
SampledPath smooth_representation(const SampledPath& f, const KernelSpec& kernel);

// ---------------------------------------------------------------------------
// Principal Schroedinger paths

struct PrincipalPathSpec {
  double hbar_over_m = 1.0;
  double c = 0.0;
  int sign = +1;
  double eps = 0.0;
  double perturbation_amplitude = 0.0;
  /// Terms of the periodic Takagi perturbation; 0 picks enough for the grid.
  int n_terms = 0;
};

/// X(t) = sign sqrt(hbar/m) (t - c - eps/2) + A K_{1/2}((t/eps) mod 1).
/// The perturbation phase is computed from the integer grid index, so it is
/// exactly eps-periodic on the samples.
SampledPath gen_principal_schrodinger(const PrincipalPathSpec& spec, const GridSpec& grid);

// ---------------------------------------------------------------------------
// Quantum geometric representation

struct SingleGraph {
  SampledPath mean;
};

struct GraphPair {
  SampledPath forward;
  SampledPath backward;
};

using QuantumRepresentation = std::variant<SingleGraph, GraphPair>;

/// Single central-mean graph when eps exceeds the h-minimal resolution of f (or
/// the resolution sits at the grid floor), otherwise the forward/backward pair.
QuantumRepresentation quantum_representation(const SampledPath& f, double eps, double h);

}  // namespace scalecalc
