#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "scalecalc/core_paths.hpp"
#include "scalecalc/scale_laws.hpp"

using namespace scalecalc;

namespace {

SampledPath takagi(double alpha, int log2n) {
  const auto grid = oracle::dyadic_grid(0.0, 1.0, log2n);
  return gen_takagi(alpha, takagi_terms_for(alpha, grid.dt), grid);
}

std::vector<double> dyadic(int lo, int hi) {
  std::vector<double> w;
  for (int k = lo; k <= hi; ++k) w.push_back(std::ldexp(1.0, -k));
  return w;
}

}  // namespace

TEST(GraphLength, ZeroFunction) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 8), [](double) { return 0.0; });
  for (double eps : {0.5, 0.25, 0.0078125}) EXPECT_NEAR(graph_length(f, eps), 1.0, 1e-14);
}

TEST(GraphLength, Diagonal) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 8), [](double t) { return t; });
  EXPECT_NEAR(graph_length(f, 0.25), std::sqrt(2.0), 1e-14);
}

TEST(GraphLength, TailSegment) {
  // width 3 dt on 8 intervals: two full steps plus a tail of 2 dt
  const SampledPath f = sample(GridSpec{0.0, 0.125, 9}, [](double t) { return t; });
  EXPECT_NEAR(graph_length(f, 0.375), std::sqrt(2.0), 1e-14);
}

TEST(GraphLength, MatchesBruteForce) {
  const SampledPath f = takagi(0.5, 12);
  const int terms = takagi_terms_for(0.5, f.dt());
  for (double eps : dyadic(5, 10)) {
    double ref = 0.0;
    const int steps = static_cast<int>(std::llround(1.0 / eps));
    for (int i = 0; i < steps; ++i) {
      const double a = oracle::takagi(0.5, terms, i * eps);
      const double b = oracle::takagi(0.5, terms, (i + 1) * eps);
      ref += std::hypot(eps, b - a);
    }
    EXPECT_NEAR(graph_length(f, eps), ref, 1e-10 * ref);
  }
}

TEST(ScaleLawOde, HolderFixedPoint) {
  for (const auto& p : scale_law_ode(ScaleLawForm::Holder, 0.5, 1.0, 0.0, -5.0, 50)) {
    EXPECT_DOUBLE_EQ(p.value, 1.0);
  }
}

TEST(ScaleLawOde, InverseIsReciprocal) {
  const auto y = scale_law_ode(ScaleLawForm::Holder, 0.3, 2.5, 0.0, -6.0, 2000);
  const auto x = scale_law_ode(ScaleLawForm::Inverse, 0.3, 1.0 / 2.5, 0.0, -6.0, 2000);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i].value * y[i].value, 1.0, 1e-6);
}

TEST(ScaleLawOde, LinearMatchesExponential) {
  const double alpha = 0.4;
  const auto z = scale_law_ode(ScaleLawForm::Linear, alpha, 1.7, 0.5, -4.0, 1000);
  for (const auto& p : z) {
    const double ref = 1.7 * std::exp((1.0 - alpha) * (p.log_eps - 0.5));
    EXPECT_NEAR(p.value, ref, 1e-8 * ref);
  }
}

TEST(ScaleLawOde, Errors) {
  EXPECT_THROW(scale_law_ode(ScaleLawForm::Holder, 0.5, 0.0, 0.0, -1.0, 10), SingularityError);
  EXPECT_THROW(scale_law_ode(ScaleLawForm::Holder, 0.5, -1.0, 0.0, -1.0, 10), ParameterError);
  EXPECT_THROW(scale_law_ode(ScaleLawForm::Linear, 0.5, 1.0, 0.0, -1.0, 0), ParameterError);
}

TEST(HolderFit, LineClampsToOne) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 12), [](double t) { return 0.5 * t; });
  const ScaleLawFit fit = fit_holder_exponent(f, default_fit_widths(f));
  EXPECT_DOUBLE_EQ(fit.alpha_hat, 1.0);
  EXPECT_NEAR(fit.slope, 0.0, 1e-12);
  EXPECT_LT(fit.residual, 1e-12);
}

TEST(HolderFit, TakagiHalf) {
  const ScaleLawFit fit = fit_holder_exponent(takagi(0.5, 16), dyadic(5, 12));
  EXPECT_GE(fit.alpha_hat, 0.45);
  EXPECT_LE(fit.alpha_hat, 0.55);
}

TEST(HolderFit, TooFewWidths) {
  EXPECT_THROW(fit_holder_exponent(takagi(0.5, 10), dyadic(5, 7)), ParameterError);
}

TEST(Envelopes, SandwichTakagi) {
  const double alpha = 0.5;
  const SampledPath f = takagi(alpha, 14);
  const auto widths = dyadic(3, 10);
  const HolderConstants k = fit_holder_constants(f, alpha, widths);
  ASSERT_GT(k.c, 0.0);
  ASSERT_GE(k.C, k.c);
  for (const auto& row : envelope_table(f, alpha, k, widths)) {
    EXPECT_LE(row.lower, row.length * (1.0 + 1e-12)) << row.eps;
    EXPECT_LE(row.length, row.upper * (1.0 + 1e-12)) << row.eps;
  }
}

TEST(Envelopes, ClosedForm) {
  EXPECT_NEAR(length_envelope(0.25, 0.5, 1.0), std::sqrt(0.25 + 1.0) / 0.5, 1e-14);
}

TEST(WeakExponents, ConstantProfile) {
  const SampledPath a = sample(oracle::dyadic_grid(0.0, 1.0, 10), [](double) { return 0.4; });
  const WeakScaleExponents w = weak_scale_exponents(a, dyadic(2, 6));
  for (std::size_t i = 0; i < w.eps.size(); ++i) {
    EXPECT_NEAR(w.gamma[i], 0.4, 1e-14);
    EXPECT_NEAR(w.beta[i], 0.4, 1e-14);
    EXPECT_NEAR(w.gamma_prime[i], 0.0, 1e-12);
    EXPECT_NEAR(w.e_minus(i, 0.5), 0.6 * (0.5 - 0.125), 1e-12);
  }
}

TEST(WeakExponents, LinearProfile) {
  const SampledPath a = sample(oracle::dyadic_grid(0.0, 1.0, 12), [](double t) { return 0.3 + 0.4 * t; });
  const WeakScaleExponents w = weak_scale_exponents(a, dyadic(2, 8));
  for (std::size_t i = 0; i < w.eps.size(); ++i) {
    const double e = w.eps[i];
    // sample means over the half-open windows [0, e) and [1 - e, 1)
    EXPECT_NEAR(w.gamma[i], 0.3 + 0.2 * (e - a.dt()), 1e-12);
    EXPECT_NEAR(w.beta[i], 0.7 - 0.2 * (e + a.dt()), 1e-12);
    EXPECT_LE(w.gamma[i], w.beta[i]);
  }
}

TEST(BoxDimension, Line) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 12), [](double t) { return t; });
  EXPECT_NEAR(box_counting_dimension(f, dyadic(3, 9)).dimension, 1.0, 0.1);
}

TEST(BoxDimension, Zero) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 12), [](double) { return 0.0; });
  EXPECT_NEAR(box_counting_dimension(f, dyadic(3, 9)).dimension, 1.0, 0.1);
}

TEST(BoxDimension, TakagiHalf) {
  const SampledPath f = takagi(0.5, 16);
  EXPECT_NEAR(box_counting_dimension(f, default_fit_widths(f)).dimension, 1.5, 0.1);
}
