#include "jacring/field.hpp"

namespace jacring {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63)) {
    throw InputError("prime " + std::to_string(p) + " exceeds 2^63");
  }
  if (!is_prime_u64(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
  return powmod(a, e, p_);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + name());
  return powmod(a, p_ - 2, p_);
}

PrimeField::Element PrimeField::from_int(long long v) const noexcept {
  if (v >= 0) return static_cast<Element>(v) % p_;
  // -(v+1) avoids overflow at LLONG_MIN
  Element m = (static_cast<Element>(-(v + 1)) + 1) % p_;
  return neg(m);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class m(std::to_string(p_));
  mpz_class r = v % m;
  if (r < 0) r += m;
  return std::stoull(r.get_str());
}

PrimeField::Element PrimeField::from_rational(const mpq_class& v) const {
  Element den = from_integer(v.get_den());
  if (den == 0) {
    throw DivisionByZero("denominator of " + v.get_str() +
                         " vanishes modulo " + std::to_string(p_));
  }
  return mul(from_integer(v.get_num()), inv(den));
}

std::string PrimeField::to_string(Element a) const {
  if (a > p_ / 2) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw DivisionByZero("inverse of zero in QQ");
  return 1 / a;
}

RationalField::Element RationalField::pow(const Element& a,
                                          std::uint64_t e) const {
  Element r = 1;
  Element b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace jacring
