#include "jacring/degeneration.hpp"

#include "jacring/parse.hpp"

namespace jacring {

FamilyTemplate FamilyTemplate::parse(std::string_view text, const Grading& grading) {
  auto raw = parse_parametric_polynomial(text, grading);
  std::optional<int> degree;
  for (const auto& [m, c] : raw.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < grading.num_vars(); ++i) d += grading.weight(i) * m[i];
    if (degree && *degree != d) {
      throw NotHomogeneous("family template '" + std::string(text) +
                           "' is not homogeneous in the x variables");
    }
    degree = d;
  }
  return FamilyTemplate(grading, std::string(text), std::move(raw));
}

Polynomial<RationalField> FamilyTemplate::at(const mpq_class& t) const {
  Polynomial<RationalField> out(Ring<RationalField>{grading_, RationalField{}});
  const std::size_t n = grading_.num_vars();
  RationalField qq;
  for (const auto& [m, c] : raw_.terms()) {
    std::vector<int> x(m.exponents().begin(), m.exponents().begin() + n);
    out.add_term(Monomial(std::move(x)), c * qq.pow(t, m[n]));
  }
  return out;
}

bool FamilyTemplate::depends_on_parameter() const {
  const std::size_t n = grading_.num_vars();
  for (const auto& [m, c] : raw_.terms()) {
    if (m[n] != 0) return true;
  }
  return false;
}

}  // namespace jacring
