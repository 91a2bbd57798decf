#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "oracle.hpp"

using namespace jacring;
using namespace testing_support;

TEST_CASE("parse: quartic family member at t = 2") {
  auto r = gf_ring(4);
  auto f = poly("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", r);
  CHECK(f.num_terms() == 5);
  CHECK(f.degree() == 4);
  CHECK(f.coefficient(Monomial({2, 2, 0, 0})) == r.field.from_int(-2));
}

TEST_CASE("parse: zero and cancellation") {
  auto r = gf_ring(2);
  CHECK(poly("0", r).is_zero());
  CHECK(poly("x0*x1 - x1*x0", r).is_zero());
  CHECK(poly("  - x0 + x0 ", r).is_zero());
}

TEST_CASE("parse: parentheses, powers and integer factors") {
  auto r = qq_ring(2);
  auto f = poly("(x0+x1)^2", r);
  CHECK(f == poly("x0^2 + 2*x0*x1 + x1^2", r));
  CHECK(poly("3*x0*2", r) == poly("6*x0", r));
  CHECK(poly("123456789012345678901234567890*x1", r)
            .coefficient(Monomial({0, 1})) == mpq_class("123456789012345678901234567890"));
}

TEST_CASE("parse: errors carry positions") {
  auto r = gf_ring(2);
  try {
    poly("x0 + * x1", r);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(poly("x2", r), ParseError);
  CHECK_THROWS_AS(poly("x0 +", r), ParseError);
  CHECK_THROWS_AS(poly("(x0 + x1", r), ParseError);
  CHECK_THROWS_AS(poly("y0", r), ParseError);
  CHECK_THROWS_AS(poly("x", r), ParseError);
  CHECK_THROWS_AS(parse_rational_polynomial("x0^2 + x1", Grading(2), true), NotHomogeneous);
  try {
    poly("x0 + x7", r);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("x7") != std::string::npos);
  }
}

TEST_CASE("multiply: small products") {
  auto r1 = gf_ring(1);
  CHECK(poly("x0", r1) * poly("x0", r1) == poly("x0^2", r1));
  auto r2 = gf_ring(2);
  CHECK(poly("x0+x1", r2) * poly("x0+x1", r2) == poly("x0^2+2*x0*x1+x1^2", r2));
  CHECK_THROWS_AS(poly("x0", r1) * poly("x0", r2), RingMismatch);
}

TEST_CASE("multiply: (x0+x1+x2+x3)^8 against the multinomial oracle") {
  const auto expected = oracle::multinomial({2, 2, 2, 2});
  CHECK(expected == 2520);
  auto r = gf_ring(4);
  auto ell8 = poly("x0+x1+x2+x3", r).pow(8);
  CHECK(ell8.coefficient(Monomial({2, 2, 2, 2})) == expected);
  CHECK(ell8.coefficient(Monomial({8, 0, 0, 0})) == 1);
  CHECK(ell8.coefficient(Monomial({3, 1, 2, 2})) == oracle::multinomial({3, 1, 2, 2}));
  // every monomial of degree 8 in 4 variables appears
  CHECK(ell8.num_terms() == oracle::monomials(4, 8).size());
}

TEST_CASE("jacobian generators") {
  auto r1 = gf_ring(1);
  auto g1 = jacobian_generators(poly("x0^3", r1));
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == poly("3*x0^2", r1));

  auto r = gf_ring(4);
  auto gf = jacobian_generators(fermat(r, 4));
  REQUIRE(gf.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(gf[i] == poly("4*x" + std::to_string(i) + "^3", r));
  }

  auto gt = jacobian_generators(poly("x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2", r));
  REQUIRE(gt.size() == 4);
  CHECK(gt[0] == poly("4*x0^3-4*x0*x1^2", r));
  CHECK(gt[1] == poly("4*x1^3-4*x0^2*x1", r));
  CHECK(gt[2] == poly("4*x2^3", r));
  CHECK(gt[3] == poly("4*x3^3", r));

  // zero derivatives are omitted
  CHECK(jacobian_generators(poly("x0^3+x1^3", r)).size() == 2);
  CHECK_THROWS_AS(jacobian_generators(poly("x0^3+x1", r)), NotHomogeneous);
}

TEST_CASE("jacobian generators respect weights") {
  Ring<PrimeField> r{Grading({1, 1, 1, 2, 5}), PrimeField()};
  auto f = poly("x0^10+x1^10+x2^10+x3^5+x4^2", r);
  REQUIRE(f.degree() == 10);
  auto gens = jacobian_generators(f);
  REQUIRE(gens.size() == 5);
  for (std::size_t j = 0; j < 5; ++j) CHECK(gens[j].degree() == 10 - r.grading.weight(j));
}

TEST_CASE("monomial enumeration and graded-lex order") {
  Grading g(3);
  auto ms = g.monomials_of_degree(2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial({2, 0, 0}));
  CHECK(ms.back() == Monomial({0, 0, 2}));
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(g.greater(ms[i - 1], ms[i]));
  CHECK(g.greater(Monomial({0, 0, 3}), Monomial({2, 0, 0})));
  Grading w({1, 2});
  CHECK(w.monomials_of_degree(4).size() == 3);  // x0^4, x0^2 x1, x1^2
  CHECK(Grading(5).monomials_of_degree(-1).empty());
  CHECK_THROWS_AS(Grading(std::vector<int>{1, 0}), InputError);
}

TEST_CASE("property: commutativity, associativity, degree additivity") {
  std::mt19937_64 rng(7);
  auto r = gf_ring(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int da = 1 + trial % 3, db = 1 + (trial / 3) % 3, dc = 1 + (trial / 9) % 2;
    auto a = random_homogeneous(r, da, rng, 0.3);
    auto b = random_homogeneous(r, db, rng, 0.3);
    auto c = random_homogeneous(r, dc, rng, 0.3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == da + db);
  }
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(11);
  auto r = gf_ring(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_homogeneous(r, 1 + trial % 4, rng, 0.5);
    CHECK(poly(a.to_string(), r) == a);
  }
  auto q = qq_ring(3);
  auto f = poly("-3*x0^2*x2 + x1^3 - 7", q);
  CHECK(poly(f.to_string(), q) == f);
  CHECK(poly("0", q).to_string() == "0");
}

TEST_CASE("property: Euler relation sum x_j dF/dx_j = d F") {
  std::mt19937_64 rng(3);
  auto q = qq_ring(4);
  auto gfr = gf_ring(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 4;
    Polynomial<RationalField> f(q);
    for (const auto& m : q.grading.monomials_of_degree(d)) {
      if (rng() % 3 == 0) f.add_term(m, q.field.random(rng));
    }
    Polynomial<RationalField> euler(q);
    for (std::size_t j = 0; j < 4; ++j) {
      euler = euler + Polynomial<RationalField>::variable(q, j) * f.derivative(j);
    }
    CHECK(euler == f.scaled(mpq_class(d)));

    auto fp = random_homogeneous(gfr, d, rng, 0.4);
    Polynomial<PrimeField> ep(gfr);
    for (std::size_t j = 0; j < 4; ++j) {
      ep = ep + Polynomial<PrimeField>::variable(gfr, j) * fp.derivative(j);
    }
    CHECK(ep == fp.scaled(gfr.field.from_int(d)));
  }
}

TEST_CASE("prime field basics") {
  PrimeField f(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.from_rational(mpq_class(1, 2)) == 4);
  CHECK_THROWS_AS(f.from_rational(mpq_class(1, 7)), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(8), InputError);
  CHECK(is_prime_u64(kDefaultPrime));
  for (auto p : kAgreementPrimes) CHECK(is_prime_u64(p));
  CHECK_FALSE(is_prime_u64(kDefaultPrime - 2));
  CHECK(f.to_string(6) == "-1");
  // characteristic 2 kills the derivative of x^2
  Ring<PrimeField> r2{Grading(1), PrimeField(2)};
  CHECK(poly("x0^2", r2).derivative(0).is_zero());
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/2") == mpq_class(-7, 2));
  CHECK(parse_rational("4/6") == mpq_class(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}
