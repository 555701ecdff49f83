#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "scalecalc/error.hpp"

namespace scalecalc {

using Complex = std::complex<double>;

/// Uniform sampling grid t_i = t0 + i * dt, i = 0 .. length-1.
struct GridSpec {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t length = 0;

  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  /// Grid of `intervals + 1` points covering [t0, t0 + span] exactly at the ends.
  static GridSpec covering(double t0, double span, std::size_t intervals) {
    return GridSpec{t0, span / static_cast<double>(intervals), intervals + 1};
  }
};

namespace detail {
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Complex& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}
}  // namespace detail

/// Samples of a function on a uniform grid. Immutable after construction.
template <class T>
class BasicPath {
 public:
  using value_type = T;

  BasicPath(double t0, double dt, std::vector<T> values)
      : t0_(t0), dt_(dt), values_(std::move(values)) {
    if (values_.empty()) throw ParameterError("path has no samples");
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw ParameterError("grid step must be positive and finite");
    if (!std::isfinite(t0_)) throw ParameterError("grid origin must be finite");
    for (const auto& v : values_) {
      if (!detail::is_finite(v)) throw ParameterError("path contains a non-finite sample");
    }
  }

  double t0() const { return t0_; }
  double dt() const { return dt_; }
  std::size_t size() const { return values_.size(); }
  double time(std::size_t i) const { return t0_ + static_cast<double>(i) * dt_; }
  double t_end() const { return time(values_.size() - 1); }
  /// Length of the covered interval, (size-1) * dt.
  double span_length() const { return static_cast<double>(values_.size() - 1) * dt_; }
  GridSpec grid() const { return GridSpec{t0_, dt_, values_.size()}; }

  std::span<const T> values() const& { return values_; }
  /// Moves the samples out of a temporary, so `for (x : make().values())` stays valid.
  std::vector<T> values() && { return std::move(values_); }
  const T& operator[](std::size_t i) const { return values_[i]; }

  /// Samples [first, first + count) as a new path carrying its own origin.
  BasicPath slice(std::size_t first, std::size_t count) const {
    if (count == 0 || first + count > values_.size()) throw GridError("slice exceeds the path");
    return BasicPath(time(first), dt_,
                     std::vector<T>(values_.begin() + static_cast<std::ptrdiff_t>(first),
                                    values_.begin() + static_cast<std::ptrdiff_t>(first + count)));
  }

 private:
  double t0_;
  double dt_;
  std::vector<T> values_;
};

using SampledPath = BasicPath<double>;
using ComplexPath = BasicPath<Complex>;

/// Converts an operator width to a whole number of grid steps, k >= 1.
inline std::size_t width_to_steps(double width, double dt) {
  if (!(width > 0.0) || !std::isfinite(width)) throw ParameterError("width must be positive and finite");
  const double ratio = width / dt;
  const double k = std::round(ratio);
  if (k < 1.0 || std::abs(ratio - k) > 1e-9 * std::max(1.0, k)) {
    throw GridError("width " + std::to_string(width) + " is not an integer multiple of dt = " +
                    std::to_string(dt));
  }
  return static_cast<std::size_t>(k);
}

/// Integer index of `sub`'s first sample on `base`'s grid (both must share dt).
template <class A, class B>
std::ptrdiff_t index_offset(const BasicPath<A>& base, const BasicPath<B>& sub) {
  if (std::abs(base.dt() - sub.dt()) > 1e-12 * base.dt()) throw GridError("paths have different grid steps");
  const double r = (sub.t0() - base.t0()) / base.dt();
  const double k = std::round(r);
  if (std::abs(r - k) > 1e-6) throw GridError("paths are not on a shared grid");
  return static_cast<std::ptrdiff_t>(k);
}

/// Overlapping window of two paths on a shared grid: index of the first common
/// sample in each, and the common length.
struct Overlap {
  std::size_t first_a = 0;
  std::size_t first_b = 0;
  std::size_t count = 0;
};

template <class A, class B>
Overlap overlap(const BasicPath<A>& a, const BasicPath<B>& b) {
  const std::ptrdiff_t off = index_offset(a, b);  // b starts at a[off]
  const std::ptrdiff_t start_a = std::max<std::ptrdiff_t>(0, off);
  const std::ptrdiff_t start_b = start_a - off;
  const std::ptrdiff_t end_a =
      std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(a.size()), off + static_cast<std::ptrdiff_t>(b.size()));
  if (end_a <= start_a) throw GridError("paths do not overlap");
  return Overlap{static_cast<std::size_t>(start_a), static_cast<std::size_t>(start_b),
                 static_cast<std::size_t>(end_a - start_a)};
}

/// Samples a callable on a grid.
template <class F>
SampledPath sample(const GridSpec& grid, F&& fn) {
  if (grid.length == 0) throw ParameterError("grid is empty");
  std::vector<double> v(grid.length);
  for (std::size_t i = 0; i < grid.length; ++i) v[i] = fn(grid.time(i));
  return SampledPath(grid.t0, grid.dt, std::move(v));
}

}  // namespace scalecalc
