#include "scalecalc/quantum_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace scalecalc {

Poly::Poly(double constant) {
  if (constant != 0.0) c_.push_back(constant);
}

Poly Poly::monomial(double coeff, std::size_t power) {
  Poly p;
  if (coeff == 0.0) return p;
  p.c_.assign(power + 1, 0.0);
  p.c_[power] = coeff;
  return p;
}

double Poly::operator()(double eps) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * eps + *it;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  }
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Word::Word(std::string_view letters) : letters_(letters) {
  for (char ch : letters_) {
    if (ch != '+' && ch != '-') throw ParameterError("word letters must be '+' or '-'");
  }
}

std::vector<Word> all_words(std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      out.push_back(out[i] * Word("+"));
      out.push_back(out[i] * Word("-"));
    }
    level_start = level_end;
  }
  return out;
}

WordSeries operator*(const WordSeries& a, const WordSeries& b) {
  WordSeries out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) out.add(wa * wb, ca * cb);
  }
  return out;
}

TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
  TensorSeries out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) out.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  }
  return out;
}

TensorSeries coproduct(const Word& w) {
  TensorSeries out(WordPair{Word(), Word()});
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word l = Word::letter(w.at(i));
    TensorSeries gen;
    gen.add({l, Word()}, Poly(1.0));
    gen.add({Word(), l}, Poly(1.0));
    gen.add({l, l}, Poly::monomial(sigma(w.at(i)), 1));
    out = out * gen;
  }
  return out;
}

TensorSeries coproduct(const WordSeries& s) {
  TensorSeries out;
  for (const auto& [w, c] : s.terms()) out += c * coproduct(w);
  return out;
}

TensorSeries evaluate_at(const TensorSeries& t, double eps) {
  TensorSeries out;
  for (const auto& [k, c] : t.terms()) out.add(k, Poly(c(eps)));
  return out;
}

Poly counit(const WordSeries& s) { return s.coeff(Word()); }

TensorSeries swap(const TensorSeries& t) {
  TensorSeries out;
  for (const auto& [k, c] : t.terms()) out.add({k.second, k.first}, c);
  return out;
}

WordSeries counit_left(const TensorSeries& t) {
  WordSeries out;
  for (const auto& [k, c] : t.terms()) {
    if (k.first.empty()) out.add(k.second, c);
  }
  return out;
}

WordSeries counit_right(const TensorSeries& t) {
  WordSeries out;
  for (const auto& [k, c] : t.terms()) {
    if (k.second.empty()) out.add(k.first, c);
  }
  return out;
}

Tensor3Series coproduct_left(const TensorSeries& t) {
  Tensor3Series out;
  for (const auto& [k, c] : t.terms()) {
    const TensorSeries dk = coproduct(k.first);
    for (const auto& [d, cd] : dk.terms()) out.add({d.first, d.second, k.second}, c * cd);
  }
  return out;
}

Tensor3Series coproduct_right(const TensorSeries& t) {
  Tensor3Series out;
  for (const auto& [k, c] : t.terms()) {
    const TensorSeries dk = coproduct(k.second);
    for (const auto& [d, cd] : dk.terms()) out.add({k.first, d.first, d.second}, c * cd);
  }
  return out;
}

SampledPath eval_word(const Word& w, const SampledPath& f, double eps) {
  const std::size_t k = width_to_steps(eps, f.dt());
  if (w.size() * k >= f.size()) throw GridError("path too short for the stencil depth of the word");
  SampledPath out = f;
  for (std::size_t i = w.size(); i-- > 0;) out = quantum_diff(out, eps, w.at(i));
  return out;
}

namespace {

// Index range [first, last] of `p` inside the grid of `base`.
std::pair<std::ptrdiff_t, std::ptrdiff_t> index_range(const SampledPath& base, const SampledPath& p) {
  const std::ptrdiff_t first = index_offset(base, p);
  return {first, first + static_cast<std::ptrdiff_t>(p.size()) - 1};
}

double at_index(const SampledPath& base, const SampledPath& p, std::ptrdiff_t idx) {
  return p[static_cast<std::size_t>(idx - index_offset(base, p))];
}

}  // namespace

double check_commuting_diagram(const WordSeries& s, const SampledPath& f, const SampledPath& g, double eps) {
  const Overlap ov = overlap(f, g);
  const SampledPath fa = f.slice(ov.first_a, ov.count);
  const SampledPath ga = g.slice(ov.first_b, ov.count);
  std::vector<double> prod(ov.count);
  for (std::size_t i = 0; i < ov.count; ++i) prod[i] = fa[i] * ga[i];
  const SampledPath fg(fa.t0(), fa.dt(), std::move(prod));

  struct Term {
    double coeff;
    SampledPath left;
    SampledPath right;
  };
  std::vector<std::pair<double, SampledPath>> lhs;
  std::vector<Term> rhs;
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(fg.size()) - 1;
  auto narrow = [&](const SampledPath& p) {
    const auto [a, b] = index_range(fg, p);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  };
  for (const auto& [w, c] : s.terms()) {
    lhs.emplace_back(c(eps), eval_word(w, fg, eps));
    narrow(lhs.back().second);
  }
  const TensorSeries delta = evaluate_at(coproduct(s), eps);
  for (const auto& [k, c] : delta.terms()) {
    rhs.push_back({c(eps), eval_word(k.first, fa, eps), eval_word(k.second, ga, eps)});
    narrow(rhs.back().left);
    narrow(rhs.back().right);
  }
  if (hi < lo) throw GridError("no common valid points for the evaluation diagram");
  double worst = 0.0;
  for (std::ptrdiff_t idx = lo; idx <= hi; ++idx) {
    double a = 0.0;
    for (const auto& [c, p] : lhs) a += c * at_index(fg, p, idx);
    double b = 0.0;
    for (const auto& t : rhs) b += t.coeff * at_index(fg, t.left, idx) * at_index(fg, t.right, idx);
    worst = std::max(worst, std::abs(a - b));
  }
  return worst;
}

AlgebraReport run_algebra_checks(const AlgebraCheckOptions& options) {
  if (options.max_word_len < 1) throw ParameterError("max word length must be at least 1");
  if (options.eps_steps < 1) throw ParameterError("eps_steps must be at least 1");
  AlgebraReport rep;
  rep.max_word_len = options.max_word_len;
  rep.trials = options.trials;
  rep.homomorphism = rep.counit = rep.coassociative = rep.cocommutative = true;

  const std::vector<Word> words = all_words(options.max_word_len);
  rep.words_checked = words.size();
  const double probe[3] = {0.5, 0.125, 1.0 / 1024.0};
  for (const Word& a : words) {
    const TensorSeries da = coproduct(a);
    if (counit_left(da) != WordSeries(a) || counit_right(da) != WordSeries(a)) rep.counit = false;
    if (swap(da) != da) rep.cocommutative = false;
    if (coproduct_left(da) != coproduct_right(da)) rep.coassociative = false;
    for (const Word& b : words) {
      if (a.size() + b.size() > options.max_word_len) continue;
      const TensorSeries lhs = coproduct(a * b);
      const TensorSeries rhs = da * coproduct(b);
      if (lhs != rhs) rep.homomorphism = false;
      for (double e : probe) {
        if (evaluate_at(lhs, e) != evaluate_at(rhs, e)) rep.homomorphism = false;
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(1, words.size() - 1);
  std::uniform_int_distribution<std::size_t> count(1, options.max_word_len);
  const GridSpec grid = GridSpec::covering(0.0, 1.0, 1024);
  const double eps = static_cast<double>(options.eps_steps) * grid.dt;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    WordSeries s;
    const std::size_t terms = count(rng);
    for (std::size_t i = 0; i < terms; ++i) s.add(words[pick(rng)], Poly(unit(rng)));
    if (unit(rng) > 0.0) s.add(Word(), Poly(unit(rng)));
    const double fc[4] = {unit(rng), unit(rng), unit(rng), unit(rng)};
    const double gc[4] = {unit(rng), unit(rng), unit(rng), unit(rng)};
    auto cubic = [](const double* c) {
      return [c](double t) { return c[0] + t * (c[1] + t * (c[2] + t * c[3])); };
    };
    const SampledPath f = sample(grid, cubic(fc));
    const SampledPath g = sample(grid, cubic(gc));
    rep.max_error = std::max(rep.max_error, check_commuting_diagram(s, f, g, eps));
  }
  return rep;
}

}  // namespace scalecalc
