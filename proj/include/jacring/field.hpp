#pragma once

// Coefficient domains. Both expose the same small interface so the rest of
// the engine can be written once as templates over `Field`.

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "jacring/errors.hpp"

namespace jacring {

/// 2^62 - 57.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// Primes used by multi-prime agreement runs; the first is the default.
inline constexpr std::array<std::uint64_t, 3> kAgreementPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Integers modulo a prime below 2^63. Elements are kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return false; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }

  Element add(Element a, Element b) const noexcept {
    Element s = a + b;  // no overflow: a, b < 2^63
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }
  /// a - b*c
  Element sub_mul(Element a, Element b, Element c) const noexcept {
    return sub(a, mul(b, c));
  }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  Element from_int(long long v) const noexcept;
  Element from_integer(const mpz_class& v) const;
  /// Throws DivisionByZero when the denominator vanishes mod p.
  Element from_rational(const mpq_class& v) const;

  Element random(std::mt19937_64& rng) const { return rng() % p_; }

  /// Centered representative, so small negative integers print as such.
  std::string to_string(Element a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
};

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint64_t characteristic() const noexcept { return 0; }
  bool is_rational() const noexcept { return true; }
  std::string name() const { return "QQ"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub_mul(const Element& a, const Element& b, const Element& c) const {
    return a - b * c;
  }
  Element inv(const Element& a) const;
  Element pow(const Element& a, std::uint64_t e) const;

  Element from_int(long long v) const { return mpq_class(static_cast<signed long>(v)); }
  Element from_integer(const mpz_class& v) const { return mpq_class(v); }
  Element from_rational(const mpq_class& v) const { return v; }

  /// Small random integers; rank questions only need genericity.
  Element random(std::mt19937_64& rng) const {
    return from_int(static_cast<long long>(rng() % (1u << 21)) - (1 << 20));
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) {
    return true;
  }
};

}  // namespace jacring
