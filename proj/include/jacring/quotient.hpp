#pragma once

// Graded slices of S/I for a homogeneous ideal I, computed degree by degree
// with linear algebra on the ideal slice I_k = span{ m * g : deg m = k - deg g }.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "jacring/linalg.hpp"
#include "jacring/polynomial.hpp"

namespace jacring {

/// Matrix of a multiplication map R_source -> R_target in standard-monomial
/// bases. Column j holds the normal form of g * source_basis[j].
template <class Field>
struct GradedMap {
  int source_degree;
  int target_degree;
  DenseMatrix<Field> matrix;  // dim R_target x dim R_source
  std::vector<Monomial> source_basis;
  std::vector<Monomial> target_basis;

  std::size_t rank() const { return matrix.rank(); }
};

/// Composition `outer ∘ inner`.
template <class Field>
GradedMap<Field> compose(const GradedMap<Field>& outer, const GradedMap<Field>& inner) {
  if (outer.source_degree != inner.target_degree) {
    throw InputError("compose: degree mismatch");
  }
  return GradedMap<Field>{inner.source_degree, outer.target_degree,
                          outer.matrix * inner.matrix, inner.source_basis,
                          outer.target_basis};
}

struct ArtinianStatus {
  bool artinian;
  std::size_t dim_sigma_plus1;
  std::size_t dim_sigma_plus2;
};

template <class Field>
class QuotientRing {
 public:
  using Element = typename Field::Element;

  /// Zero generators are dropped; the rest must be homogeneous in `ring`.
  QuotientRing(Ring<Field> ring, const std::vector<Polynomial<Field>>& generators)
      : ring_(std::move(ring)) {
    for (const auto& g : generators) {
      if (!(g.ring() == ring_)) throw RingMismatch();
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) {
        throw NotHomogeneous("ideal generator " + g.to_string() + " is not homogeneous");
      }
      generators_.push_back(g);
    }
  }

  QuotientRing(const QuotientRing&) = delete;
  QuotientRing& operator=(const QuotientRing&) = delete;

  const Ring<Field>& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_.field; }
  const std::vector<Polynomial<Field>>& generators() const noexcept { return generators_; }

  std::vector<int> generator_degrees() const {
    std::vector<int> out;
    for (const auto& g : generators_) out.push_back(g.degree());
    return out;
  }

  /// dim (S/I)_k; 0 for negative k.
  std::size_t graded_dim(int k) const { return k < 0 ? 0 : slice(k).basis.size(); }

  /// Monomials of degree k outside the pivot set, in graded-lex order.
  const std::vector<Monomial>& standard_monomials(int k) const {
    static const std::vector<Monomial> kEmpty;
    return k < 0 ? kEmpty : slice(k).basis;
  }

  /// Coordinates of [f] in the standard basis of R_k, where f is zero or
  /// homogeneous of degree k.
  std::vector<Element> normal_form(const Polynomial<Field>& f, int k) const {
    if (!(f.ring() == ring_)) throw RingMismatch();
    if (!f.is_homogeneous()) throw NotHomogeneous("normal_form: input is not homogeneous");
    if (!f.is_zero() && f.degree() != k) {
      throw NotHomogeneous("normal_form: polynomial has degree " +
                           std::to_string(f.degree()) + ", expected " + std::to_string(k));
    }
    if (k < 0) return {};
    const Slice& s = slice(k);
    std::vector<Element> out(s.basis.size(), field().zero());
    for (const auto& [m, c] : f.terms()) accumulate(s, m, c, out);
    return out;
  }

  std::vector<Element> normal_form(const Polynomial<Field>& f) const {
    return normal_form(f, f.degree());
  }

  /// Polynomial whose class has the given coordinates in R_k.
  Polynomial<Field> lift(int k, std::span<const Element> coords) const {
    const auto& basis = standard_monomials(k);
    Polynomial<Field> p(ring_);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
  }

  /// Multiplication by g (zero or homogeneous of degree g_degree) from R_k.
  GradedMap<Field> multiplication_matrix(const Polynomial<Field>& g, int g_degree,
                                         int k) const {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (!g.is_homogeneous() || (!g.is_zero() && g.degree() != g_degree)) {
      throw NotHomogeneous("multiplier must be homogeneous of degree " +
                           std::to_string(g_degree));
    }
    const int target = k + g_degree;
    const auto& src = standard_monomials(k);
    const auto& dst = standard_monomials(target);
    GradedMap<Field> map{k, target, DenseMatrix<Field>(field(), dst.size(), src.size()),
                         src, dst};
    if (src.empty() || dst.empty()) return map;
    const Slice& s = slice(target);
    std::vector<Element> col(dst.size(), field().zero());
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::fill(col.begin(), col.end(), field().zero());
      for (const auto& [m, c] : g.terms()) accumulate(s, m * src[j], c, col);
      for (std::size_t i = 0; i < dst.size(); ++i) map.matrix(i, j) = col[i];
    }
    return map;
  }

  GradedMap<Field> multiplication_matrix(const Polynomial<Field>& g, int k) const {
    return multiplication_matrix(g, g.degree(), k);
  }

  /// Dimensions at sigma+1 and sigma+2; Artinian when both vanish.
  ArtinianStatus artinian_check(int sigma) const {
    if (sigma < 0) throw InputError("artinian_check: negative socle degree");
    ArtinianStatus st{false, graded_dim(sigma + 1), graded_dim(sigma + 2)};
    st.artinian = st.dim_sigma_plus1 == 0 && st.dim_sigma_plus2 == 0;
    return st;
  }

 private:
  struct Slice {
    std::vector<Monomial> monomials;  // all of S_k, graded-lex descending
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    std::vector<Monomial> basis;       // standard monomials
    std::vector<std::size_t> basis_pos;  // column -> position in basis, or npos
    SparseEchelon<Field> echelon;
  };

  static constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

  /// out += c * nf(m)
  void accumulate(const Slice& s, const Monomial& m, const Element& c,
                  std::vector<Element>& out) const {
    const std::size_t col = s.index.at(m);
    if (s.basis_pos[col] != kNpos) {
      out[s.basis_pos[col]] = field().add(out[s.basis_pos[col]], c);
      return;
    }
    // m = -(tail of its pivot row) modulo I_k
    const auto& row = s.echelon.pivot_row(col);
    for (std::size_t i = 1; i < row.size(); ++i) {
      const std::size_t p = s.basis_pos[row[i].first];
      out[p] = field().sub_mul(out[p], c, row[i].second);
    }
  }

  const Slice& slice(int k) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(k);
      if (it != cache_.end()) return *it->second;
    }
    auto built = build_slice(k);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(k, std::move(built));
    return *it->second;
  }

  std::unique_ptr<const Slice> build_slice(int k) const {
    auto monomials = ring_.grading.monomials_of_degree(k);
    const std::size_t width = monomials.size();
    auto s = std::make_unique<Slice>(Slice{std::move(monomials), {}, {}, {},
                                           SparseEchelon<Field>(field(), width)});
    s->index.reserve(width);
    for (std::size_t i = 0; i < width; ++i) s->index.emplace(s->monomials[i], i);

    using Row = typename SparseEchelon<Field>::Row;
    for (const auto& g : generators_) {
      const int e = g.degree();
      if (e > k) continue;
      for (const auto& m : ring_.grading.monomials_of_degree(k - e)) {
        Row row;
        row.reserve(g.num_terms());
        for (const auto& [gm, c] : g.terms()) row.emplace_back(s->index.at(gm * m), c);
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        s->echelon.insert(row);
      }
    }
    s->echelon.finish();
    s->basis_pos.assign(width, kNpos);
    for (std::size_t c = 0; c < width; ++c) {
      if (!s->echelon.is_pivot(c)) {
        s->basis_pos[c] = s->basis.size();
        s->basis.push_back(s->monomials[c]);
      }
    }
    return s;
  }

  Ring<Field> ring_;
  std::vector<Polynomial<Field>> generators_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<const Slice>> cache_;
};

/// Quotient S/J_F by the Jacobian ideal of F.
template <class Field>
std::shared_ptr<const QuotientRing<Field>> jacobian_quotient(const Polynomial<Field>& f) {
  return std::make_shared<const QuotientRing<Field>>(f.ring(), jacobian_generators(f));
}

/// Coefficients of prod(1 - t^e_i) / prod(1 - t^w_j), the Hilbert function of
/// an Artinian complete intersection with generator degrees e_i in a ring
/// with weights w_j. Requires one generator degree per variable; throws
/// NonCIShape when the quotient is not a polynomial.
std::vector<long long> ci_hilbert_series(const std::vector<int>& generator_degrees,
                                         const Grading& grading);

}  // namespace jacring
