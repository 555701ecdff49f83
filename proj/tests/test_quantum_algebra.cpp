#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "scalecalc/quantum_algebra.hpp"

using namespace scalecalc;

namespace {

const Word I{};
const Word P{"+"};
const Word M{"-"};

Poly eps_poly(double c, std::size_t k) { return Poly::monomial(c, k); }

}  // namespace

TEST(Coproduct, Identity) {
  EXPECT_EQ(coproduct(I), TensorSeries(WordPair{I, I}));
}

TEST(Coproduct, Generator) {
  TensorSeries expected(WordPair{P, I});
  expected.add({I, P}, Poly(1.0));
  expected.add({P, P}, eps_poly(1.0, 1));
  EXPECT_EQ(coproduct(P), expected);
  EXPECT_EQ(coproduct(P).size(), 3u);

  TensorSeries minus(WordPair{M, I});
  minus.add({I, M}, Poly(1.0));
  minus.add({M, M}, eps_poly(-1.0, 1));
  EXPECT_EQ(coproduct(M), minus);
}

TEST(Coproduct, NineTermProduct) {
  // (a(x)1 + 1(x)a + s eps a(x)a)(b(x)1 + 1(x)b + s' eps b(x)b) with a = +, b = -
  const Word PM{"+-"};
  TensorSeries expected;
  expected.add({PM, I}, Poly(1.0));
  expected.add({P, M}, Poly(1.0));
  expected.add({PM, M}, eps_poly(-1.0, 1));
  expected.add({M, P}, Poly(1.0));
  expected.add({I, PM}, Poly(1.0));
  expected.add({M, PM}, eps_poly(-1.0, 1));
  expected.add({PM, P}, eps_poly(1.0, 1));
  expected.add({P, PM}, eps_poly(1.0, 1));
  expected.add({PM, PM}, eps_poly(-1.0, 2));
  EXPECT_EQ(coproduct(PM), expected);
  EXPECT_EQ(coproduct(PM).size(), 9u);
}

TEST(Coproduct, Homomorphism) {
  for (const Word& a : all_words(3)) {
    for (const Word& b : all_words(2)) {
      EXPECT_EQ(coproduct(a * b), coproduct(a) * coproduct(b)) << a.str() << " " << b.str();
    }
  }
}

TEST(Coproduct, Cocommutative) {
  for (const Word& w : all_words(4)) EXPECT_EQ(swap(coproduct(w)), coproduct(w)) << w.str();
}

TEST(Coproduct, Coassociative) {
  for (const Word& w : all_words(3)) {
    EXPECT_EQ(coproduct_left(coproduct(w)), coproduct_right(coproduct(w))) << w.str();
  }
}

TEST(Counit, Values) {
  EXPECT_EQ(counit(WordSeries(I)), Poly(1.0));
  EXPECT_TRUE(counit(WordSeries(P)).is_zero());
  WordSeries s(I, Poly(3.0));
  s.add(Word("+-"), Poly(2.0));
  EXPECT_EQ(counit(s), Poly(3.0));
}

TEST(Counit, Axioms) {
  for (const Word& w : all_words(3)) {
    EXPECT_EQ(counit_left(coproduct(w)), WordSeries(w));
    EXPECT_EQ(counit_right(coproduct(w)), WordSeries(w));
  }
}

TEST(Words, RejectsOtherLetters) { EXPECT_THROW(Word("+x"), ParameterError); }

TEST(Words, Enumeration) {
  EXPECT_EQ(all_words(0).size(), 1u);
  EXPECT_EQ(all_words(3).size(), 15u);
}

TEST(EvalWord, EmptyWordIsIdentity) {
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 6), [](double t) { return t * t; });
  const SampledPath g = eval_word(I, f, 0.125);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g[i], f[i]);
}

TEST(EvalWord, ForwardOnSquare) {
  const double eps = 0.0625;
  const SampledPath f = sample(oracle::dyadic_grid(0.0, 1.0, 8), [](double t) { return t * t; });
  const SampledPath g = eval_word(P, f, eps);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], 2.0 * g.time(i) + eps, 1e-12);
}

TEST(EvalWord, MixedOnCube) {
  const double eps = 0.0625;
  const auto grid = oracle::dyadic_grid(0.0, 1.0, 8);
  const SampledPath f = sample(grid, [](double t) { return t * t * t; });
  const SampledPath lhs = eval_word(Word("+-"), f, eps);
  const SampledPath inner =
      sample(grid, [&](double t) { return 3.0 * t * t - 3.0 * t * eps + eps * eps; });
  const SampledPath rhs = eval_word(P, inner, eps);
  const Overlap o = overlap(lhs, rhs);
  ASSERT_GT(o.count, 0u);
  for (std::size_t i = 0; i < o.count; ++i) EXPECT_NEAR(lhs[o.first_a + i], rhs[o.first_b + i], 1e-9);
}

TEST(Diagram, LeibnizOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  const auto grid = oracle::dyadic_grid(0.0, 1.0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cf = oracle::random_poly(rng, 4);
    const auto cg = oracle::random_poly(rng, 3);
    const SampledPath f = sample(grid, [&](double t) { return oracle::horner(cf, t); });
    const SampledPath g = sample(grid, [&](double t) { return oracle::horner(cg, t); });
    EXPECT_LE(check_commuting_diagram(WordSeries(P), f, g, 32 * grid.dt), 1e-10);
    EXPECT_EQ(check_commuting_diagram(WordSeries(I), f, g, 32 * grid.dt), 0.0);
  }
}

TEST(Diagram, MixedWordOnMonomials) {
  const auto grid = oracle::dyadic_grid(0.0, 1.0, 10);
  const SampledPath f = sample(grid, [](double t) { return t * t; });
  const SampledPath g = sample(grid, [](double t) { return t; });
  EXPECT_LE(check_commuting_diagram(WordSeries(Word("+-")), f, g, 16 * grid.dt), 1e-10);
}

TEST(AlgebraChecks, Default) {
  const AlgebraReport r = run_algebra_checks({});
  EXPECT_TRUE(r.homomorphism);
  EXPECT_TRUE(r.counit);
  EXPECT_TRUE(r.coassociative);
  EXPECT_TRUE(r.cocommutative);
  EXPECT_EQ(r.trials, 100u);
  EXPECT_LE(r.max_error, 1e-10);
}

TEST(Poly, Arithmetic) {
  const Poly a = Poly(1.0) + eps_poly(2.0, 1);
  const Poly b = a * a;
  EXPECT_EQ(b.coeffs(), (std::vector<double>{1.0, 4.0, 4.0}));
  EXPECT_DOUBLE_EQ(b(0.5), 4.0);
  EXPECT_TRUE((a + eps_poly(-2.0, 1) + Poly(-1.0)).is_zero());
}
