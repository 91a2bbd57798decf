#pragma once

// Sparse weighted-homogeneous polynomial arithmetic over a coefficient field.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacring/errors.hpp"
#include "jacring/field.hpp"

namespace jacring {

/// Exponent vector. The ordering used by std::map is plain lexicographic;
/// basis and print order go through `Grading::greater`.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  /// The monomial 1 in `num_vars` variables.
  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int e : m.exponents()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Variable count and positive integer weights, deg x_i = weights[i].
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::size_t num_vars)
      : Grading(std::vector<int>(num_vars, 1)) {}
  explicit Grading(std::vector<int> weights);

  std::size_t num_vars() const noexcept { return weights_.size(); }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  bool is_standard() const noexcept;

  int degree(const Monomial& m) const;

  /// Graded lexicographic with x0 > x1 > ... .
  bool greater(const Monomial& a, const Monomial& b) const;

  /// All monomials of weighted degree k, largest first. Empty for k < 0.
  std::vector<Monomial> monomials_of_degree(int k) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<int> weights_;
};

/// Polynomial ring S = K[x0..x{n-1}] with a weighted grading.
template <class Field>
struct Ring {
  Grading grading;
  Field field;

  std::size_t num_vars() const noexcept { return grading.num_vars(); }
  friend bool operator==(const Ring&, const Ring&) = default;
};

template <class Field>
class Polynomial {
 public:
  using Element = typename Field::Element;
  using Terms = std::map<Monomial, Element>;

  explicit Polynomial(Ring<Field> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring<Field>& ring, const Element& c) {
    Polynomial p(ring);
    p.add_term(Monomial::one(ring.num_vars()), c);
    return p;
  }
  static Polynomial variable(const Ring<Field>& ring, std::size_t i) {
    Monomial m = Monomial::one(ring.num_vars());
    m[i] = 1;
    return term(ring, std::move(m), ring.field.one());
  }
  static Polynomial term(const Ring<Field>& ring, Monomial m, const Element& c) {
    Polynomial p(ring);
    p.add_term(std::move(m), c);
    return p;
  }

  const Ring<Field>& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_.field; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  Element coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field().zero() : it->second;
  }

  /// Accumulates c into the coefficient of m, dropping it if it cancels.
  void add_term(Monomial m, const Element& c) {
    if (field().is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second = field().add(it->second, c);
      if (field().is_zero(it->second)) terms_.erase(it);
    }
  }

  /// True for the zero polynomial and for polynomials whose terms share one
  /// weighted degree.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = ring_.grading.degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
      return ring_.grading.degree(t.first) == d;
    });
  }

  /// Weighted degree of a nonzero homogeneous polynomial.
  int degree() const {
    if (terms_.empty()) throw NotHomogeneous("zero polynomial has no degree");
    if (!is_homogeneous()) throw NotHomogeneous("polynomial is not homogeneous");
    return ring_.grading.degree(terms_.begin()->first);
  }

  Polynomial operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field().neg(c));
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial scaled(const Element& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, field().mul(a, c));
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, field().mul(ca, cb));
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base(*this);
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial derivative(std::size_t j) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m[j] == 0) continue;
      Monomial dm(m);
      dm[j] -= 1;
      r.add_term(std::move(dm), field().mul(c, field().from_int(m[j])));
    }
    return r;
  }

  /// Canonical text in the input grammar, terms in descending graded-lex.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw RingMismatch();
  }

  Ring<Field> ring_;
  Terms terms_;
};

/// Terms of p in descending graded-lex order.
template <class Field>
std::vector<std::pair<Monomial, typename Field::Element>> sorted_terms(
    const Polynomial<Field>& p) {
  std::vector<std::pair<Monomial, typename Field::Element>> v(p.terms().begin(),
                                                              p.terms().end());
  const Grading& g = p.ring().grading;
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return g.greater(a.first, b.first); });
  return v;
}

std::string monomial_to_string(const Monomial& m);

template <class Field>
std::string Polynomial<Field>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(*this)) {
    std::string coeff = field().to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(m);
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

/// Maps a polynomial over Q into another coefficient field.
template <class Field>
Polynomial<Field> convert(const Polynomial<RationalField>& p, const Field& field) {
  Ring<Field> ring{p.ring().grading, field};
  Polynomial<Field> r(ring);
  for (const auto& [m, c] : p.terms()) r.add_term(m, field.from_rational(c));
  return r;
}

/// All nonzero partial derivatives dF_i/dx_j, in order (i, j).
template <class Field>
std::vector<Polynomial<Field>> jacobian_generators(
    const std::vector<Polynomial<Field>>& polys) {
  if (polys.empty()) throw InputError("jacobian_generators: empty polynomial list");
  std::vector<Polynomial<Field>> gens;
  for (const auto& f : polys) {
    if (!f.is_homogeneous()) {
      throw NotHomogeneous("jacobian_generators: " + f.to_string() +
                           " is not homogeneous");
    }
    for (std::size_t j = 0; j < f.ring().num_vars(); ++j) {
      auto df = f.derivative(j);
      if (!df.is_zero()) gens.push_back(std::move(df));
    }
  }
  return gens;
}

template <class Field>
std::vector<Polynomial<Field>> jacobian_generators(const Polynomial<Field>& f) {
  return jacobian_generators(std::vector<Polynomial<Field>>{f});
}

/// Sum of all variables of weight one.
template <class Field>
Polynomial<Field> linear_sum_of_variables(const Ring<Field>& ring) {
  Polynomial<Field> ell(ring);
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (ring.grading.weight(i) == 1) ell = ell + Polynomial<Field>::variable(ring, i);
  }
  return ell;
}

}  // namespace jacring
