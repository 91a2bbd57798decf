#pragma once

#include <random>
#include <string>

#include "jacring/parse.hpp"
#include "jacring/polynomial.hpp"

namespace testing_support {

using jacring::Grading;
using jacring::PrimeField;
using jacring::Polynomial;
using jacring::RationalField;
using jacring::Ring;

inline Ring<PrimeField> gf_ring(std::size_t n, std::uint64_t p = jacring::kDefaultPrime) {
  return Ring<PrimeField>{Grading(n), PrimeField(p)};
}

inline Ring<RationalField> qq_ring(std::size_t n) {
  return Ring<RationalField>{Grading(n), RationalField{}};
}

template <class Field>
Polynomial<Field> poly(const std::string& text, const Ring<Field>& ring) {
  return jacring::parse_polynomial(text, ring);
}

inline std::string fermat_text(int num_vars, int d) {
  std::string s;
  for (int i = 0; i < num_vars; ++i) {
    if (i) s += "+";
    s += "x" + std::to_string(i) + "^" + std::to_string(d);
  }
  return s;
}

template <class Field>
Polynomial<Field> fermat(const Ring<Field>& ring, int d) {
  return poly(fermat_text(static_cast<int>(ring.num_vars()), d), ring);
}

/// Random homogeneous polynomial of degree d with about `density` of the
/// monomials present.
template <class Field>
Polynomial<Field> random_homogeneous(const Ring<Field>& ring, int d, std::mt19937_64& rng,
                                     double density = 1.0) {
  Polynomial<Field> p(ring);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const auto& m : ring.grading.monomials_of_degree(d)) {
    if (coin(rng) <= density) p.add_term(m, ring.field.random(rng));
  }
  return p;
}

}  // namespace testing_support

#include "jacring/hodge.hpp"

namespace testing_support {

/// Random hypersurface of dimension n and degree d, resampled until its
/// Jacobian ring is Artinian.
template <class Field>
jacring::SmoothHypersurface<Field> random_smooth(const Ring<Field>& ring, int n, int d,
                                                 std::mt19937_64& rng, double density = 1.0) {
  for (;;) {
    auto f = random_homogeneous(ring, d, rng, density);
    if (f.is_zero()) continue;
    try {
      return jacring::SmoothHypersurface<Field>::make(f, n);
    } catch (const jacring::SingularInput&) {
    }
  }
}

}  // namespace testing_support
