#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "scalecalc/paths.hpp"
#include "scalecalc/scale_ops.hpp"

namespace scalecalc {

/// Polynomial in eps, coefficients in increasing powers, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(double constant);  // NOLINT(google-explicit-constructor)
  static Poly monomial(double coeff, std::size_t power);

  const std::vector<double>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  double operator()(double eps) const;

  Poly& operator+=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<double> c_;
};

/// Word over {+, -}; "+-" stands for nabla_+ nabla_-, the empty word for I.
/// Letters act right to left.
class Word {
 public:
  Word() = default;
  /// Throws ParameterError on letters other than '+' and '-'.
  explicit Word(std::string_view letters);
  static Word letter(Side s) { return Word(s == Side::Forward ? "+" : "-"); }

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Side at(std::size_t i) const { return letters_[i] == '+' ? Side::Forward : Side::Backward; }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// All words of length <= max_len, shortest first.
std::vector<Word> all_words(std::size_t max_len);

/// Finitely supported formal sum with Poly coefficients; zero terms are never stored.
template <class Key>
class Series {
 public:
  using Map = std::map<Key, Poly>;

  Series() = default;
  Series(const Key& key, Poly coeff = Poly(1.0)) { add(key, std::move(coeff)); }  // NOLINT

  void add(const Key& key, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Poly coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Poly() : it->second;
  }

  Series& operator+=(const Series& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator*(const Poly& s, const Series& a) {
    Series out;
    for (const auto& [k, c] : a.terms_) out.add(k, s * c);
    return out;
  }
  friend bool operator==(const Series&, const Series&) = default;

 private:
  Map terms_;
};

using WordPair = std::pair<Word, Word>;
using WordTriple = std::tuple<Word, Word, Word>;
using WordSeries = Series<Word>;
using TensorSeries = Series<WordPair>;
using Tensor3Series = Series<WordTriple>;

WordSeries operator*(const WordSeries& a, const WordSeries& b);
/// (a (x) b)(c (x) d) = ac (x) bd
TensorSeries operator*(const TensorSeries& a, const TensorSeries& b);

/// Delta(I) = I(x)I, Delta(nabla_s) = nabla_s(x)I + I(x)nabla_s + s eps nabla_s(x)nabla_s,
/// extended multiplicatively over words and linearly over series.
TensorSeries coproduct(const Word& w);
TensorSeries coproduct(const WordSeries& s);
/// Coefficients evaluated at a numeric eps (constant polynomials).
TensorSeries evaluate_at(const TensorSeries& t, double eps);

/// Constant term: the coefficient of the empty word.
Poly counit(const WordSeries& s);
/// tau: a(x)b -> b(x)a
TensorSeries swap(const TensorSeries& t);
/// (u (x) id) and (id (x) u)
WordSeries counit_left(const TensorSeries& t);
WordSeries counit_right(const TensorSeries& t);
/// (Delta (x) id) and (id (x) Delta)
Tensor3Series coproduct_left(const TensorSeries& t);
Tensor3Series coproduct_right(const TensorSeries& t);

/// Applies the letters right to left as quantum differences.
SampledPath eval_word(const Word& w, const SampledPath& f, double eps);

/// max |S(fg) - sum c eval(w1, f) eval(w2, g)| over the common valid points,
/// with S = s and the tensor from coproduct(s), both evaluated at eps.
double check_commuting_diagram(const WordSeries& s, const SampledPath& f, const SampledPath& g, double eps);

struct AlgebraReport {
  std::size_t max_word_len = 0;
  std::size_t words_checked = 0;
  bool homomorphism = false;
  bool counit = false;
  bool coassociative = false;
  bool cocommutative = false;
  std::size_t trials = 0;
  double max_error = 0.0;

  bool ok(double tol) const { return homomorphism && counit && coassociative && cocommutative && max_error <= tol; }
};

struct AlgebraCheckOptions {
  std::size_t max_word_len = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Width of the evaluation diagram, in steps of a 2^-10 grid on [0, 1].
  std::size_t eps_steps = 64;
};

/// Symbolic axioms over all words up to max_word_len and `trials` random
/// evaluation-diagram instances (series of length <= max_word_len, cubic f and g).
AlgebraReport run_algebra_checks(const AlgebraCheckOptions& options = {});

}  // namespace scalecalc
