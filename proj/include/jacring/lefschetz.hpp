#pragma once

// Weak and Strong Lefschetz checks for graded Artinian quotients: maximal
// rank of multiplication by powers of a linear form, witness search, and the
// Hilbert-function obstruction.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jacring/quotient.hpp"

namespace jacring {

enum class LefschetzMode { Weak, Strong };

std::string to_string(LefschetzMode m);

struct HFObstruction {
  enum class Kind { NoObstruction, NotSymmetric, NotUnimodal };

  Kind kind = Kind::NoObstruction;
  int degree = -1;  // offending degree, -1 when unobstructed
  std::vector<std::size_t> hilbert_function;

  bool obstructed() const noexcept { return kind != Kind::NoObstruction; }
};

std::string to_string(HFObstruction::Kind k);

/// Checks symmetry about the top nonzero degree, then unimodality.
/// Trailing zeros are ignored.
HFObstruction hf_obstruction(std::vector<std::size_t> hilbert_function);

/// 4 * (sum of generator degrees), and never below 4.
template <class Field>
int default_degree_cap(const QuotientRing<Field>& q) {
  auto degs = q.generator_degrees();
  return std::max(4, 4 * std::accumulate(degs.begin(), degs.end(), 0));
}

/// h_0..h_top, found by scanning until two consecutive zero dimensions.
/// Throws NotArtinian if `cap` is reached first.
template <class Field>
std::vector<std::size_t> artinian_hilbert_function(const QuotientRing<Field>& q, int cap) {
  std::vector<std::size_t> h;
  for (int k = 0; k <= cap + 1; ++k) {
    h.push_back(q.graded_dim(k));
    if (k >= 1 && h[k] == 0 && h[k - 1] == 0) {
      while (!h.empty() && h.back() == 0) h.pop_back();
      return h;
    }
  }
  throw NotArtinian("quotient has nonzero graded pieces up to degree " +
                    std::to_string(cap + 1) + "; top degree undetectable");
}

template <class Field>
HFObstruction hf_obstruction(const QuotientRing<Field>& q, int cap) {
  return hf_obstruction(artinian_hilbert_function(q, cap));
}

/// Rank of x ell^power : R_source -> R_{source+power}.
struct RankEntry {
  int source_degree;
  int power;
  std::size_t source_dim;
  std::size_t target_dim;
  std::size_t rank;
  std::size_t expected;  // min(source_dim, target_dim)

  bool maximal() const noexcept { return rank == expected; }
};

template <class Field>
struct LefschetzReport {
  LefschetzMode mode;
  Polynomial<Field> ell;
  std::vector<std::size_t> hilbert_function;
  int top_degree;
  std::vector<RankEntry> table;
  HFObstruction obstruction;
  bool witness;
  std::optional<std::pair<int, int>> failure;  // (k, m)
};

namespace detail {

/// Maps x ell : R_k -> R_{k+1} for k = 0..top-1.
template <class Field>
std::vector<GradedMap<Field>> linear_steps(const QuotientRing<Field>& q,
                                           const Polynomial<Field>& ell, int top) {
  std::vector<GradedMap<Field>> steps;
  for (int k = 0; k < top; ++k) steps.push_back(q.multiplication_matrix(ell, 1, k));
  return steps;
}

/// x ell^m from R_k as a product of linear steps; m = 0 gives the identity.
template <class Field>
std::size_t power_rank(const QuotientRing<Field>& q,
                       const std::vector<GradedMap<Field>>& steps, int k, int m) {
  if (m == 0) return q.graded_dim(k);
  DenseMatrix<Field> acc = steps[k].matrix;
  for (int j = 1; j < m; ++j) acc = steps[k + j].matrix * acc;
  return acc.rank();
}

template <class Field>
RankEntry rank_entry(const QuotientRing<Field>& q, const std::vector<GradedMap<Field>>& steps,
                     int k, int m) {
  const std::size_t s = q.graded_dim(k);
  const std::size_t t = q.graded_dim(k + m);
  return RankEntry{k, m, s, t, power_rank(q, steps, k, m), std::min(s, t)};
}

template <class Field>
void require_linear(const Polynomial<Field>& ell) {
  if (!ell.is_zero() && (!ell.is_homogeneous() || ell.degree() != 1)) {
    throw NotHomogeneous("Lefschetz candidate " + ell.to_string() +
                         " is not a linear form");
  }
}

template <class Field>
LefschetzReport<Field> check_with_hf(const QuotientRing<Field>& q, const Polynomial<Field>& ell,
                                     LefschetzMode mode, std::vector<std::size_t> h) {
  require_linear(ell);
  const int top = static_cast<int>(h.size()) - 1;
  LefschetzReport<Field> rep{mode, ell, h, top, {}, hf_obstruction(h), true, std::nullopt};
  const auto steps = linear_steps(q, ell, top);
  for (int k = 0; k < top; ++k) rep.table.push_back(rank_entry(q, steps, k, 1));
  if (mode == LefschetzMode::Strong) {
    for (int k = 0; 2 * k <= top; ++k) {
      const int m = top - 2 * k;
      if (m == 1) continue;  // already in the m = 1 sweep
      rep.table.push_back(rank_entry(q, steps, k, m));
    }
  }
  for (const auto& e : rep.table) {
    if (!e.maximal()) {
      rep.witness = false;
      rep.failure = std::make_pair(e.source_degree, e.power);
      break;
    }
  }
  if (mode == LefschetzMode::Strong && rep.obstruction.obstructed()) {
    // A Hilbert function that is not symmetric and unimodal admits no
    // bijective reflection maps, whatever the individual ranks say.
    rep.witness = false;
    if (!rep.failure) {
      const int k = std::min(rep.obstruction.degree, top - rep.obstruction.degree);
      rep.failure = std::make_pair(k, top - 2 * k);
    }
  }
  return rep;
}

}  // namespace detail

/// WLP mode tests x ell : R_k -> R_{k+1} for all k < top. SLP mode also
/// tests the reflections x ell^{top-2k} : R_k -> R_{top-k} and is refused a
/// witness when the Hilbert function is obstructed.
template <class Field>
LefschetzReport<Field> lefschetz_check(const QuotientRing<Field>& q, const Polynomial<Field>& ell,
                                       LefschetzMode mode, int cap) {
  return detail::check_with_hf(q, ell, mode, artinian_hilbert_function(q, cap));
}

template <class Field>
LefschetzReport<Field> lefschetz_check(const QuotientRing<Field>& q, const Polynomial<Field>& ell,
                                       LefschetzMode mode) {
  return lefschetz_check(q, ell, mode, default_degree_cap(q));
}

/// Ranks of x ell^m : R_k -> R_{k+m} for every k >= 0, m >= 1 with k+m <= top.
template <class Field>
std::vector<RankEntry> power_rank_table(const QuotientRing<Field>& q,
                                        const Polynomial<Field>& ell, int cap) {
  detail::require_linear(ell);
  const auto h = artinian_hilbert_function(q, cap);
  const int top = static_cast<int>(h.size()) - 1;
  const auto steps = detail::linear_steps(q, ell, top);
  std::vector<RankEntry> out;
  for (int k = 0; k < top; ++k) {
    DenseMatrix<Field> acc = steps[k].matrix;
    for (int m = 1; k + m <= top; ++m) {
      if (m > 1) acc = steps[k + m - 1].matrix * acc;
      const std::size_t s = q.graded_dim(k);
      const std::size_t t = q.graded_dim(k + m);
      out.push_back(RankEntry{k, m, s, t, acc.rank(), std::min(s, t)});
    }
  }
  return out;
}

/// Linear form with seeded random coefficients on the weight-one variables.
template <class Field>
Polynomial<Field> random_linear_form(const Ring<Field>& ring, std::mt19937_64& rng) {
  Polynomial<Field> ell(ring);
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (ring.grading.weight(i) != 1) continue;
    ell.add_term(Polynomial<Field>::variable(ring, i).terms().begin()->first,
                 ring.field.random(rng));
  }
  return ell;
}

enum class WitnessOutcome { Witness, NoneFound, Obstructed };

std::string to_string(WitnessOutcome o);

template <class Field>
struct WitnessSearch {
  WitnessOutcome outcome;
  std::optional<LefschetzReport<Field>> report;  // witness, or best attempt
  HFObstruction obstruction;
  std::size_t candidates_tested = 0;
  std::uint64_t seed = 0;
  std::size_t num_samples = 0;
};

/// Tries each weight-one variable, their sum, then `num_samples` seeded random
/// linear forms. NoneFound is not a proof that the property fails; only
/// Obstructed (SLP mode) is definitive.
template <class Field>
WitnessSearch<Field> find_lefschetz_witness(const QuotientRing<Field>& q,
                                            std::size_t num_samples, std::uint64_t seed,
                                            int cap, LefschetzMode mode = LefschetzMode::Strong) {
  if (num_samples < 1) throw InputError("num_samples must be at least 1");
  const auto h = artinian_hilbert_function(q, cap);
  WitnessSearch<Field> res{WitnessOutcome::NoneFound, std::nullopt, hf_obstruction(h), 0,
                           seed, num_samples};
  if (mode == LefschetzMode::Strong && res.obstruction.obstructed()) {
    res.outcome = WitnessOutcome::Obstructed;
    return res;
  }
  const auto& ring = q.ring();
  std::vector<Polynomial<Field>> candidates;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (ring.grading.weight(i) == 1) candidates.push_back(Polynomial<Field>::variable(ring, i));
  }
  auto sum = linear_sum_of_variables(ring);
  if (!sum.is_zero()) candidates.push_back(sum);

  std::mt19937_64 rng(seed);
  std::size_t best_score = 0;
  auto attempt = [&](const Polynomial<Field>& ell) {
    ++res.candidates_tested;
    auto rep = detail::check_with_hf(q, ell, mode, h);
    std::size_t score = 0;
    for (const auto& e : rep.table) score += e.rank;
    const bool found = rep.witness;
    if (found || !res.report || score > best_score) {
      best_score = score;
      res.report = std::move(rep);
    }
    return found;
  };
  for (const auto& ell : candidates) {
    if (attempt(ell)) {
      res.outcome = WitnessOutcome::Witness;
      return res;
    }
  }
  for (std::size_t s = 0; s < num_samples; ++s) {
    if (attempt(random_linear_form(ring, rng))) {
      res.outcome = WitnessOutcome::Witness;
      return res;
    }
  }
  return res;
}

template <class Field>
WitnessSearch<Field> find_lefschetz_witness(const QuotientRing<Field>& q,
                                            std::size_t num_samples, std::uint64_t seed) {
  return find_lefschetz_witness(q, num_samples, seed, default_degree_cap(q));
}

/// dim of the socle in each degree 0..top: elements of R_k killed by every
/// variable.
template <class Field>
std::vector<std::size_t> socle_dimensions(const QuotientRing<Field>& q, int top) {
  const auto& ring = q.ring();
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) {
    const std::size_t src = q.graded_dim(k);
    std::vector<GradedMap<Field>> maps;
    std::size_t rows = 0;
    for (std::size_t i = 0; i < ring.num_vars(); ++i) {
      const auto xi = Polynomial<Field>::variable(ring, i);
      maps.push_back(q.multiplication_matrix(xi, ring.grading.weight(i), k));
      rows += maps.back().matrix.rows();
    }
    DenseMatrix<Field> stacked(q.field(), rows, src);
    std::size_t r0 = 0;
    for (const auto& m : maps) {
      for (std::size_t i = 0; i < m.matrix.rows(); ++i, ++r0) {
        for (std::size_t j = 0; j < src; ++j) stacked(r0, j) = m.matrix(i, j);
      }
    }
    out.push_back(src - stacked.rank());
  }
  return out;
}

}  // namespace jacring
