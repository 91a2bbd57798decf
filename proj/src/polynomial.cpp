#include "jacring/polynomial.hpp"

namespace jacring {

Grading::Grading(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("a ring needs at least one variable");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw InputError("weight of x" + std::to_string(i) + " must be positive, got " +
                       std::to_string(weights_[i]));
    }
  }
}

bool Grading::is_standard() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int Grading::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * m[i];
  return d;
}

bool Grading::greater(const Monomial& a, const Monomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

namespace {

void enumerate(const std::vector<int>& w, std::size_t i, int remaining,
               std::vector<int>& cur, std::vector<Monomial>& out) {
  if (i + 1 == w.size()) {
    if (remaining % w[i] == 0) {
      cur[i] = remaining / w[i];
      out.emplace_back(cur);
    }
    return;
  }
  for (int e = remaining / w[i]; e >= 0; --e) {
    cur[i] = e;
    enumerate(w, i + 1, remaining - e * w[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> Grading::monomials_of_degree(int k) const {
  std::vector<Monomial> out;
  if (k < 0) return out;
  std::vector<int> cur(weights_.size(), 0);
  // Descending x0 exponent first yields lex-descending order within a degree.
  enumerate(weights_, 0, k, cur, out);
  return out;
}

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace jacring
