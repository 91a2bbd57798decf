#pragma once

// Degree bookkeeping that identifies primitive Hodge pieces of a smooth
// hypersurface X = V(F) in P^{n+1} with graded pieces of its Jacobian ring.

#include <memory>
#include <string>
#include <vector>

#include "jacring/quotient.hpp"

namespace jacring {

/// (n+2)(d-2)
int socle_degree(int n, int d);

/// (p+1)d - (n+2), the Jacobian-ring degree carrying H^{n-p,p}_prim.
/// Negative values mean the piece is zero.
int hodge_degree(int n, int d, int p);

struct HypersurfaceContext {
  int n;
  int d;
  int sigma;
  std::vector<int> hodge_degrees;  // a_p for p = 0..n
  int ks_degree;                   // first-order deformations live in R_d

  static HypersurfaceContext make(int n, int d);
};

enum class CIClass { GeneralType, CalabiYau, FanoOrQuadric };

std::string to_string(CIClass c);

struct CIContext {
  int n;
  int c;
  std::vector<int> degrees;
  int kappa;  // sum d_i - (n + c + 1)
  CIClass classification;
  bool quadric_hypersurface;  // c = 1, d = 2: H^{n,0} = 0
};

CIContext classify_ci(int n, int c, const std::vector<int>& degrees);

/// sum of degrees minus sum of weights
int weighted_socle(const std::vector<int>& weights, const std::vector<int>& degrees);

/// A hypersurface of dimension n whose Jacobian ring has been checked to be
/// Artinian, i.e. V(F) is smooth.
template <class Field>
class SmoothHypersurface {
 public:
  /// Throws SingularInput when the Jacobian ring is not Artinian and
  /// InputError when F does not fit P^{n+1}.
  static SmoothHypersurface make(const Polynomial<Field>& f, int n) {
    check_shape(f, n);
    auto q = jacobian_quotient(f);
    auto ctx = HypersurfaceContext::make(n, f.degree());
    auto st = q->artinian_check(ctx.sigma);
    if (!st.artinian) {
      throw SingularInput("hypersurface " + f.to_string() + " is singular: dim R_" +
                          std::to_string(ctx.sigma + 1) + " = " +
                          std::to_string(st.dim_sigma_plus1) + ", dim R_" +
                          std::to_string(ctx.sigma + 2) + " = " +
                          std::to_string(st.dim_sigma_plus2));
    }
    return SmoothHypersurface(f, std::move(ctx), std::move(q));
  }

  /// Validates that f is a nonzero homogeneous polynomial in n+2 variables of
  /// weight one.
  static void check_shape(const Polynomial<Field>& f, int n) {
    if (n < 1) throw InputError("dimension n must be at least 1");
    if (f.is_zero()) throw InputError("zero polynomial");
    if (!f.is_homogeneous()) throw NotHomogeneous("polynomial is not homogeneous");
    if (f.ring().num_vars() != static_cast<std::size_t>(n + 2)) {
      throw InputError("a hypersurface of dimension " + std::to_string(n) + " needs " +
                       std::to_string(n + 2) + " variables, ring has " +
                       std::to_string(f.ring().num_vars()));
    }
    if (!f.ring().grading.is_standard()) {
      throw InputError("the Hodge dictionary needs all weights equal to 1");
    }
  }

  const Polynomial<Field>& polynomial() const noexcept { return f_; }
  const HypersurfaceContext& context() const noexcept { return ctx_; }
  int n() const noexcept { return ctx_.n; }
  int d() const noexcept { return ctx_.d; }
  int sigma() const noexcept { return ctx_.sigma; }
  const QuotientRing<Field>& quotient() const noexcept { return *q_; }
  std::shared_ptr<const QuotientRing<Field>> shared_quotient() const noexcept { return q_; }

  /// h^{n-p,p}_prim for p = 0..n.
  std::vector<std::size_t> hodge_numbers() const {
    std::vector<std::size_t> h;
    for (int a : ctx_.hodge_degrees) h.push_back(q_->graded_dim(a));
    return h;
  }

 private:
  SmoothHypersurface(Polynomial<Field> f, HypersurfaceContext ctx,
                     std::shared_ptr<const QuotientRing<Field>> q)
      : f_(std::move(f)), ctx_(std::move(ctx)), q_(std::move(q)) {}

  Polynomial<Field> f_;
  HypersurfaceContext ctx_;
  std::shared_ptr<const QuotientRing<Field>> q_;
};

template <class Field>
std::vector<std::size_t> primitive_hodge_numbers(const Polynomial<Field>& f, int n) {
  return SmoothHypersurface<Field>::make(f, n).hodge_numbers();
}

}  // namespace jacring
