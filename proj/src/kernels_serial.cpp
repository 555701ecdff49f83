#include <algorithm>
#include <cmath>
#include <vector>

#include "scalecalc/kernels.hpp"

namespace scalecalc::kernels::serial {

void forward_difference(std::span<const double> v, std::size_t k, double eps, std::span<double> out) {
  const std::size_t n = v.size() - k;
  for (std::size_t i = 0; i < n; ++i) out[i] = (v[i + k] - v[i]) / eps;
}

void second_difference_defect(std::span<const double> v, std::size_t k, double eps, std::span<double> out) {
  const std::size_t n = v.size() - 2 * k;
  for (std::size_t i = 0; i < n; ++i) out[i] = std::abs(v[i + 2 * k] + v[i] - 2.0 * v[i + k]) / eps;
}

void scale_difference(std::span<const double> v, std::size_t k, double eps, std::span<Complex> out) {
  const std::size_t n = v.size() - 2 * k;
  for (std::size_t i = 0; i < n; ++i) {
    const double plus = (v[i + 2 * k] - v[i + k]) / eps;
    const double minus = (v[i + k] - v[i]) / eps;
    out[i] = Complex(0.5 * (plus + minus), -0.5 * (plus - minus));
  }
}

void scale_difference(std::span<const Complex> v, std::size_t k, double eps, std::span<Complex> out) {
  const std::size_t n = v.size() - 2 * k;
  for (std::size_t i = 0; i < n; ++i) {
    const double plus_r = (v[i + 2 * k].real() - v[i + k].real()) / eps;
    const double minus_r = (v[i + k].real() - v[i].real()) / eps;
    const double plus_m = (v[i + 2 * k].imag() - v[i + k].imag()) / eps;
    const double minus_m = (v[i + k].imag() - v[i].imag()) / eps;
    // box(C_r) + i box(C_m)
    const double mean_r = 0.5 * (plus_r + minus_r);
    const double fluct_r = -0.5 * (plus_r - minus_r);
    const double mean_m = 0.5 * (plus_m + minus_m);
    const double fluct_m = -0.5 * (plus_m - minus_m);
    out[i] = Complex(mean_r - fluct_m, fluct_r + mean_m);
  }
}

double segment_length_sum(std::span<const double> v, std::size_t k, double eps) {
  const std::size_t steps = (v.size() - 1) / k;
  double sum = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double dv = v[(i + 1) * k] - v[i * k];
    sum += std::sqrt(eps * eps + dv * dv);
  }
  return sum;
}

std::uint64_t box_count(std::span<const double> v, std::size_t k, double box) {
  const std::size_t last = v.size() - 1;
  std::uint64_t count = 0;
  for (std::size_t start = 0; start < last; start += k) {
    const std::size_t stop = std::min(start + k, last);
    double lo = v[start];
    double hi = v[start];
    for (std::size_t i = start + 1; i <= stop; ++i) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    count += static_cast<std::uint64_t>(std::floor(hi / box) - std::floor(lo / box)) + 1;
  }
  return count;
}

double holder_ratio_all_pairs(std::span<const double> v, double dt, double alpha) {
  const std::size_t n = v.size();
  std::vector<double> lag_pow(n);
  for (std::size_t lag = 1; lag < n; ++lag) lag_pow[lag] = std::pow(static_cast<double>(lag) * dt, alpha);
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, std::abs(v[j] - v[i]) / lag_pow[j - i]);
  }
  return best;
}

double holder_ratio_pairs(std::span<const double> v, double dt, double alpha,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
  double best = 0.0;
  for (const auto& [i, j] : pairs) {
    const std::size_t lag = j > i ? j - i : i - j;
    if (lag == 0) continue;
    best = std::max(best, std::abs(v[j] - v[i]) / std::pow(static_cast<double>(lag) * dt, alpha));
  }
  return best;
}

void minimal_resolution_steps(std::span<const double> v, double dt, std::size_t kmax, double h,
                              std::span<std::size_t> out) {
  const std::size_t n = v.size();
  for (std::size_t c = kmax; c + kmax < n; ++c) {
    std::size_t found = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
      const double eps = static_cast<double>(k) * dt;
      if (std::abs(v[c + k] + v[c - k] - 2.0 * v[c]) / eps < h) {
        found = k;
        break;
      }
    }
    out[c - kmax] = found;
  }
}

double mean_chord(std::span<const double> v, double dt, std::size_t k) {
  const std::size_t n = v.size() - k;
  const double step = static_cast<double>(k) * dt;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dv = v[i + k] - v[i];
    sum += std::sqrt(step * step + dv * dv);
  }
  return sum / static_cast<double>(n);
}

void schrodinger_residual(const WaveGridView& field, std::span<const SliceCoefficients> slices,
                          std::span<const double> potential, GradientForm form, std::span<Complex> out) {
  const std::size_t nx = field.nx;
  const std::size_t nt = field.nt;
  const std::span<const Complex> psi = field.psi;
  for (std::size_t k = 1; k + 1 < nt; ++k) {
    const SliceCoefficients& c = slices[k];
    const bool with_gradient = c.gradient != Complex(0.0, 0.0);
    for (std::size_t j = 1; j + 1 < nx; ++j) {
      const std::size_t idx = k * nx + j;
      const Complex p = psi[idx];
      const Complex psi_t = (psi[idx + nx] - psi[idx - nx]) / (2.0 * field.dtt);
      const Complex psi_xx = (psi[idx + 1] - 2.0 * p + psi[idx - 1]) / (field.dx * field.dx);
      Complex r = c.time * psi_t + c.curvature * psi_xx;
      if (with_gradient) {
        const Complex psi_x = (psi[idx + 1] - psi[idx - 1]) / (2.0 * field.dx);
        Complex g;
        if (form == GradientForm::OverPsi) {
          const Complex log_grad = psi_x / p;
          g = p * (log_grad * log_grad);
        } else {
          g = psi_x * psi_x * p;
        }
        r += c.gradient * g;
      }
      r -= potential[j] * p;
      out[(k - 1) * (nx - 2) + (j - 1)] = r;
    }
  }
}

}  // namespace scalecalc::kernels::serial
