#pragma once

// Infinitesimal variation of Hodge structure for smooth hypersurfaces,
// realized as multiplication in the Jacobian ring: step maps
// R_{a_p} -> R_{a_{p+1}}, the diagonal Yukawa map x xi^n : R_{a_0} -> R_{a_n},
// sampled lower bounds for its maximal rank, and the infinitesimal Torelli
// rank.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jacring/hodge.hpp"
#include "jacring/lefschetz.hpp"

namespace jacring {

/// Expand xi^n as a polynomial while S_{nd} has at most this many monomials.
inline constexpr std::size_t kDefaultExpansionThreshold = 100000;

namespace detail {

template <class Field>
void require_deformation_class(const SmoothHypersurface<Field>& x, const Polynomial<Field>& xi) {
  if (!(xi.ring() == x.polynomial().ring())) throw RingMismatch();
  if (!xi.is_zero() && (!xi.is_homogeneous() || xi.degree() != x.d())) {
    throw NotHomogeneous("deformation class must be homogeneous of degree " +
                         std::to_string(x.d()));
  }
}

/// Number of monomials of degree k in v variables, saturating.
std::size_t monomial_count(int v, int k);

}  // namespace detail

/// x xi : R_{a_p} -> R_{a_{p+1}}, i.e. H^{n-p,p} -> H^{n-p-1,p+1}.
template <class Field>
GradedMap<Field> ivhs_step_map(const SmoothHypersurface<Field>& x, const Polynomial<Field>& xi,
                               int p) {
  if (p < 0 || p > x.n() - 1) {
    throw InputError("step index p = " + std::to_string(p) + " outside 0.." +
                     std::to_string(x.n() - 1));
  }
  detail::require_deformation_class(x, xi);
  return x.quotient().multiplication_matrix(xi, x.d(), x.context().hodge_degrees[p]);
}

template <class Field>
GradedMap<Field> yukawa_map_expanded(const SmoothHypersurface<Field>& x,
                                     const Polynomial<Field>& xi) {
  detail::require_deformation_class(x, xi);
  return x.quotient().multiplication_matrix(xi.pow(x.n()), x.n() * x.d(),
                                            x.context().hodge_degrees[0]);
}

/// Product of the step maps for p = n-1, ..., 0.
template <class Field>
GradedMap<Field> yukawa_map_composed(const SmoothHypersurface<Field>& x,
                                     const Polynomial<Field>& xi) {
  GradedMap<Field> acc = ivhs_step_map(x, xi, 0);
  for (int p = 1; p < x.n(); ++p) acc = compose(ivhs_step_map(x, xi, p), acc);
  return acc;
}

template <class Field>
struct YukawaEvaluation {
  Polynomial<Field> xi;
  GradedMap<Field> map;  // R_{a_0} -> R_{a_n}
  std::size_t rank;
  bool expanded;  // which route built the map
};

template <class Field>
YukawaEvaluation<Field> yukawa_evaluate(const SmoothHypersurface<Field>& x,
                                        const Polynomial<Field>& xi,
                                        std::size_t expansion_threshold =
                                            kDefaultExpansionThreshold) {
  const bool expand =
      detail::monomial_count(x.n() + 2, x.n() * x.d()) <= expansion_threshold;
  auto map = expand ? yukawa_map_expanded(x, xi) : yukawa_map_composed(x, xi);
  const std::size_t r = map.rank();
  return YukawaEvaluation<Field>{xi, std::move(map), r, expand};
}

enum class VariationVerdict { IMaximal, LowerBoundOnly, Vacuous };

std::string to_string(VariationVerdict v);

struct SampleRank {
  std::string label;
  std::size_t rank;
};

template <class Field>
struct VariationReport {
  std::size_t samples_tested = 0;
  std::uint64_t seed = 0;
  std::size_t d_M_lower_bound = 0;
  std::optional<Polynomial<Field>> witness_xi;
  std::optional<Polynomial<Field>> lefschetz_ell;
  std::size_t theoretical_max = 0;  // h^{n,0}
  VariationVerdict verdict = VariationVerdict::Vacuous;
  std::vector<SampleRank> samples;  // raw table; its minimum is not a bound on d_m
};

/// Random element of R_k: seeded coefficients on the standard monomials.
template <class Field>
Polynomial<Field> random_graded_element(const QuotientRing<Field>& q, int k,
                                        std::mt19937_64& rng) {
  Polynomial<Field> p(q.ring());
  for (const auto& m : q.standard_monomials(k)) p.add_term(m, q.field().random(rng));
  return p;
}

/// Certified lower bound for max_xi rank(x xi^n). Candidates are ell^d for a
/// Lefschetz witness ell, the coordinate powers x_i^d, the sum of variables
/// to the d, and `num_samples` random elements of R_d.
template <class Field>
VariationReport<Field> max_yukawa_rank(const SmoothHypersurface<Field>& x,
                                       std::size_t num_samples, std::uint64_t seed) {
  VariationReport<Field> rep;
  rep.seed = seed;
  rep.theoretical_max = x.quotient().graded_dim(x.context().hodge_degrees[0]);
  if (rep.theoretical_max == 0) return rep;

  const auto& ring = x.polynomial().ring();
  std::vector<std::pair<std::string, Polynomial<Field>>> candidates;
  auto search = find_lefschetz_witness(x.quotient(), num_samples, seed);
  if (search.outcome == WitnessOutcome::Witness) {
    rep.lefschetz_ell = search.report->ell;
    candidates.emplace_back("lefschetz^d", search.report->ell.pow(x.d()));
  }
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    candidates.emplace_back("x" + std::to_string(i) + "^d",
                            Polynomial<Field>::variable(ring, i).pow(x.d()));
  }
  candidates.emplace_back("sum^d", linear_sum_of_variables(ring).pow(x.d()));
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x59u};
  std::mt19937_64 rng(seq);
  for (std::size_t s = 0; s < num_samples; ++s) {
    candidates.emplace_back("random[" + std::to_string(s) + "]",
                            random_graded_element(x.quotient(), x.d(), rng));
  }

  for (auto& [label, xi] : candidates) {
    auto ev = yukawa_evaluate(x, xi);
    rep.samples.push_back(SampleRank{label, ev.rank});
    ++rep.samples_tested;
    if (!rep.witness_xi || ev.rank > rep.d_M_lower_bound) {
      rep.d_M_lower_bound = ev.rank;
      rep.witness_xi = xi;
    }
  }
  rep.verdict = rep.d_M_lower_bound == rep.theoretical_max ? VariationVerdict::IMaximal
                                                           : VariationVerdict::LowerBoundOnly;
  return rep;
}

struct TorelliResult {
  std::size_t rank;
  std::size_t dim_deformations;  // dim R_d
  std::size_t rows;              // sum of dim Hom(R_{a_p}, R_{a_{p+1}})
  bool injective;
};

/// Exact rank of xi |-> (x xi : R_{a_p} -> R_{a_{p+1}})_{p=0..n-1} on R_d.
template <class Field>
TorelliResult torelli_rank(const SmoothHypersurface<Field>& x) {
  const auto& q = x.quotient();
  const auto& basis = q.standard_monomials(x.d());
  std::vector<std::vector<typename Field::Element>> columns;
  for (const auto& m : basis) {
    auto xi = Polynomial<Field>::term(q.ring(), m, q.field().one());
    std::vector<typename Field::Element> col;
    for (int p = 0; p < x.n(); ++p) {
      auto step = ivhs_step_map(x, xi, p);
      for (std::size_t i = 0; i < step.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < step.matrix.cols(); ++j) col.push_back(step.matrix(i, j));
      }
    }
    columns.push_back(std::move(col));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  // rank of the transpose: one row per basis element of R_d
  DenseMatrix<Field> mt(q.field(), columns.size(), rows);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) mt(j, i) = columns[j][i];
  }
  const std::size_t r = mt.rank();
  return TorelliResult{r, basis.size(), rows, r == basis.size()};
}

template <class Field>
struct FiberResult {
  std::size_t index;
  std::string polynomial;
  bool smooth;
  std::optional<VariationReport<Field>> report;
  std::string error;
};

template <class Field>
struct FamilyExtremes {
  std::vector<FiberResult<Field>> fibers;
  std::optional<std::size_t> delta_prime_M;  // min over smooth fibers
};

/// Minimum over fibers of the per-fiber d_M lower bound. Singular members
/// are flagged and excluded.
template <class Field>
FamilyExtremes<Field> family_extremes(const std::vector<Polynomial<Field>>& fibers, int n,
                                      std::size_t num_samples, std::uint64_t seed) {
  FamilyExtremes<Field> out;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    FiberResult<Field> row{i, fibers[i].to_string(), false, std::nullopt, {}};
    try {
      auto x = SmoothHypersurface<Field>::make(fibers[i], n);
      row.smooth = true;
      row.report = max_yukawa_rank(x, num_samples, seed);
      const std::size_t v = row.report->d_M_lower_bound;
      if (!out.delta_prime_M || v < *out.delta_prime_M) out.delta_prime_M = v;
    } catch (const SingularInput& e) {
      row.error = e.what();
    }
    out.fibers.push_back(std::move(row));
  }
  return out;
}

}  // namespace jacring
