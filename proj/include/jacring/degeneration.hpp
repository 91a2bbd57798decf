#pragma once

// One-parameter families F_t, total Tjurina numbers read off the stabilized
// Hilbert function of S/J_F, and the degree-wise excess dim R(F)_k over the
// smooth complete-intersection value.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "jacring/ivhs.hpp"

namespace jacring {

/// Polynomial in x0..x{n-1} whose coefficients are polynomials in a rational
/// parameter t.
class FamilyTemplate {
 public:
  /// Throws NotHomogeneous unless every term has the same x-degree.
  static FamilyTemplate parse(std::string_view text, const Grading& grading);

  Polynomial<RationalField> at(const mpq_class& t) const;
  bool depends_on_parameter() const;
  const std::string& text() const noexcept { return text_; }
  const Grading& grading() const noexcept { return grading_; }

 private:
  FamilyTemplate(Grading grading, std::string text, Polynomial<RationalField> raw)
      : grading_(std::move(grading)), text_(std::move(text)), raw_(std::move(raw)) {}

  Grading grading_;
  std::string text_;
  Polynomial<RationalField> raw_;  // t is the last variable
};

inline constexpr int kDefaultStabilizationWindow = 20;

/// Socle degree of the Jacobian complete intersection: sum_j (d - w_j) - sum_j w_j.
template <class Field>
int jacobian_socle_degree(const Polynomial<Field>& f) {
  const int d = f.degree();
  int s = 0;
  for (int w : f.ring().grading.weights()) s += d - 2 * w;
  return s;
}

namespace detail {

template <class Field>
std::size_t stabilized_dim(const QuotientRing<Field>& q, int sigma, int window) {
  for (int k = sigma + 1; k <= sigma + window; ++k) {
    const std::size_t here = q.graded_dim(k);
    if (here == q.graded_dim(k + 1)) return here;
  }
  throw NoStabilization("dim (S/J)_k still changing between degrees " +
                        std::to_string(sigma + 1) + " and " +
                        std::to_string(sigma + window + 1) +
                        "; singularities are not isolated");
}

}  // namespace detail

/// Stabilized dim (S/J_F)_k for k > sigma: the sum of the Tjurina numbers of
/// the singular points (0 for smooth F). This equals the total Milnor number
/// when every singularity is weighted homogeneous.
template <class Field>
std::size_t total_tjurina(const Polynomial<Field>& f, int window = kDefaultStabilizationWindow) {
  if (f.is_zero()) throw InputError("zero polynomial");
  auto q = jacobian_quotient(f);
  return detail::stabilized_dim(*q, jacobian_socle_degree(f), window);
}

/// dim R(F)_k minus the coefficient of t^k in ((1 - t^{d-1}) / (1 - t))^{N}.
template <class Field>
long long rank_drop_delta(const QuotientRing<Field>& q, int d, int k) {
  if (k < 0) throw InputError("degree k must be nonnegative");
  const auto& g = q.ring().grading;
  if (!g.is_standard()) throw InputError("rank_drop_delta needs all weights equal to 1");
  const auto series = ci_hilbert_series(std::vector<int>(g.num_vars(), d - 1), g);
  const long long smooth = k < static_cast<int>(series.size()) ? series[k] : 0;
  return static_cast<long long>(q.graded_dim(k)) - smooth;
}

template <class Field>
long long rank_drop_delta(const Polynomial<Field>& f, int d, int k) {
  return rank_drop_delta(*jacobian_quotient(f), d, k);
}

template <class Field>
long long rank_drop_delta(const Polynomial<Field>& f, int k) {
  return rank_drop_delta(f, f.degree(), k);
}

struct FamilyScanRow {
  mpq_class t;
  std::string polynomial;
  bool smooth = false;
  std::string error;      // nonempty when the row could not be fully evaluated
  bool evaluated = false;  // graded dimensions below are filled in
  int a0 = 0, mid = 0, sigma = 0, delta_degree = 0;
  std::size_t dim_a0 = 0, dim_mid = 0, dim_sigma = 0, dim_sigma_plus1 = 0, dim_sigma_plus2 = 0;
  std::optional<std::size_t> tjurina_total;
  std::optional<std::size_t> yukawa_rank;
  std::optional<std::string> yukawa_verdict;
  std::optional<long long> delta;
};

struct FamilyScanOptions {
  std::optional<int> delta_degree;  // default: middle Hodge degree
  int stabilization_window = kDefaultStabilizationWindow;
  unsigned threads = 1;
};

template <class Field>
FamilyScanRow family_scan_row(const FamilyTemplate& tmpl, int n, const mpq_class& t,
                              std::size_t num_samples, std::uint64_t seed, const Field& field,
                              const FamilyScanOptions& opts) {
  FamilyScanRow row;
  row.t = t;
  try {
    auto fq = tmpl.at(t);
    row.polynomial = fq.to_string();
    if (fq.is_zero()) {
      row.error = "substitution gives the zero polynomial";
      return row;
    }
    auto f = convert(fq, field);
    if (f.is_zero()) {
      row.error = "polynomial vanishes in " + field.name();
      return row;
    }
    SmoothHypersurface<Field>::check_shape(f, n);
    const auto ctx = HypersurfaceContext::make(n, f.degree());
    row.a0 = ctx.hodge_degrees.front();
    row.mid = ctx.hodge_degrees[n / 2];
    row.sigma = ctx.sigma;
    row.delta_degree = opts.delta_degree.value_or(row.mid);

    std::shared_ptr<const QuotientRing<Field>> q;
    std::optional<SmoothHypersurface<Field>> x;
    try {
      x.emplace(SmoothHypersurface<Field>::make(f, n));
      q = x->shared_quotient();
    } catch (const SingularInput&) {
      q = jacobian_quotient(f);
    }
    row.smooth = x.has_value();
    row.dim_a0 = q->graded_dim(row.a0);
    row.dim_mid = q->graded_dim(row.mid);
    row.dim_sigma = q->graded_dim(row.sigma);
    row.dim_sigma_plus1 = q->graded_dim(row.sigma + 1);
    row.dim_sigma_plus2 = q->graded_dim(row.sigma + 2);
    row.evaluated = true;
    if (row.delta_degree >= 0) row.delta = rank_drop_delta(*q, ctx.d, row.delta_degree);
    if (x) {
      row.tjurina_total = 0;
      auto rep = max_yukawa_rank(*x, num_samples, seed);
      row.yukawa_rank = rep.d_M_lower_bound;
      row.yukawa_verdict = to_string(rep.verdict);
    } else {
      try {
        row.tjurina_total = detail::stabilized_dim(*q, row.sigma, opts.stabilization_window);
      } catch (const NoStabilization& e) {
        row.error = e.what();
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

/// Evaluates each t independently; rows come back in input order and do not
/// depend on the thread count.
template <class Field>
std::vector<FamilyScanRow> family_scan(const FamilyTemplate& tmpl, int n,
                                       const std::vector<mpq_class>& t_values,
                                       std::size_t num_samples, std::uint64_t seed,
                                       const Field& field, const FamilyScanOptions& opts = {}) {
  if (t_values.empty()) throw InputError("family_scan needs at least one t value");
  std::vector<FamilyScanRow> rows(t_values.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < t_values.size(); i = next++) {
      rows[i] = family_scan_row(tmpl, n, t_values[i], num_samples, seed, field, opts);
    }
  };
  const unsigned threads =
      std::clamp<unsigned>(opts.threads, 1, static_cast<unsigned>(t_values.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

}  // namespace jacring
