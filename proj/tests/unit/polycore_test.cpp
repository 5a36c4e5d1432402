#include "../support.hpp"
#include "conelab/errors.hpp"
#include "conelab/linalg.hpp"
#include "doctest.h"

using namespace conelab;
using testing::poly;

TEST_CASE("rational scalars stay in lowest terms") {
  const Field q = Field::rationals();
  const Scalar a(q, mpq_class(2, 4)), b(q, mpq_class(1, 3));
  CHECK((a + b).to_string() == "5/6");
  CHECK((a * b).to_string() == "1/6");
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(a / Scalar::zero(q), DomainError);
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  const Scalar three(f7, 3L);
  CHECK((three * three.inverse()).is_one());
  CHECK(Scalar(f7, -1L).residue() == 6);
  CHECK(Scalar(f7, mpq_class(1, 2)).residue() == 4);
  CHECK_THROWS_AS(Field::prime(8), DomainError);
  CHECK_THROWS_AS(Scalar(f7, mpq_class(1, 7)), DomainError);
  CHECK_THROWS_AS(three + Scalar(Field::rationals(), 1L), RingMismatch);
  CHECK(is_prime(kDefaultPrime));
}

TEST_CASE("polynomial ring axioms on random samples") {
  for (const Field field : {Field::rationals(), Field::prime(kDefaultPrime)}) {
    const RingPtr r = testing::ring({"x", "y", "z"}, field);
    testing::RandomPolynomials gen(r, 17);
    for (int trial = 0; trial < 40; ++trial) {
      const Polynomial a = gen.next(), b = gen.next(), c = gen.next();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a.pow(2) == a * a);
      if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
    }
  }
}

TEST_CASE("printing and parsing round-trip") {
  const RingPtr r = testing::ring({"x", "y", "z"});
  testing::RandomPolynomials gen(r, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial f = gen.next(5, 4, 9).scaled(Scalar(r->field(), mpq_class(trial + 1, 7)));
    CHECK(parse_polynomial(r, f.to_string()) == f);
  }
  CHECK(poly(r, "(x+y)^2").to_string() == "x^2 + 2*x*y + y^2");
  CHECK(poly(r, "x/2 - 1/3").to_string() == "1/2*x - 1/3");
}

TEST_CASE("parse errors carry line and column") {
  const RingPtr r = testing::ring({"x", "y"});
  try {
    parse_polynomial(r, "x + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial(r, "x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(r, "x / y"), ParseError);
}

TEST_CASE("grevlex and lex orders") {
  const RingPtr g = testing::ring({"x", "y", "z"});
  CHECK(poly(g, "x*z + y^2").leading_monomial() == Monomial{0, 2, 0});
  const RingPtr l = PolynomialRing::make(Field::rationals(), {"x", "y", "z"}, MonomialOrder::lex());
  CHECK(parse_polynomial(l, "x*z + y^2").leading_monomial() == Monomial{1, 0, 1});
  CHECK(poly(g, "x^2 + y^3").leading_monomial() == Monomial{0, 3, 0});
}

TEST_CASE("derivatives obey the product rule") {
  const RingPtr r = testing::ring({"x", "y"});
  testing::RandomPolynomials gen(r, 3);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = gen.next(), b = gen.next();
    for (std::size_t v = 0; v < 2; ++v)
      CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
  }
}

TEST_CASE("translation and evaluation agree") {
  const RingPtr r = testing::ring({"x", "y"});
  const Field q = r->field();
  const Polynomial f = poly(r, "y^2 - x^2 - x^3");
  const std::vector<Scalar> p{Scalar(q, -1L), Scalar(q, 0L)};
  CHECK(f.evaluate(p).is_zero());
  CHECK(translate(f, p).constant_term().is_zero());
  CHECK(translate(f, p).lowest_degree() == 1);
}

TEST_CASE("scalar linear algebra") {
  const Field q = Field::rationals();
  ScalarMatrix m(q, 2, 3);
  m(0, 0) = Scalar(q, 1L);
  m(0, 1) = Scalar(q, 2L);
  m(1, 0) = Scalar(q, 2L);
  m(1, 1) = Scalar(q, 4L);
  m(1, 2) = Scalar(q, 1L);
  CHECK(m.rank() == 2);
  const auto kernel = m.nullspace();
  REQUIRE(kernel.size() == 1);
  for (std::size_t i = 0; i < 2; ++i) {
    Scalar s = Scalar::zero(q);
    for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * kernel[0][j];
    CHECK(s.is_zero());
  }
  CHECK(!m.solve({Scalar(q, 1L), Scalar(q, 5L)}).empty());
}

TEST_CASE("determinant of a polynomial matrix") {
  const RingPtr r = testing::ring({"x", "y", "z", "w"});
  PolyMatrix m(r, 2, 2);
  m(0, 0) = poly(r, "x");
  m(0, 1) = poly(r, "y");
  m(1, 0) = poly(r, "z");
  m(1, 1) = poly(r, "w");
  CHECK(determinant(m) == poly(r, "x*w - y*z"));
}
