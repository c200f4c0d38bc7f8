#include <random>

#include "doctest.h"
#include "logder/error.hpp"
#include "logder/linalg.hpp"
#include "logder/polynomial.hpp"
#include "support.hpp"

using namespace logder;
using testing_support::cst;
using testing_support::vars;

TEST_CASE("rational parsing is strict and canonical") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4").get_den() == 2);
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
}

TEST_CASE("monomial order is degrevlex with x1 > x2 > x3") {
  auto m = [](std::vector<int> e) { return Monomial(e); };
  CHECK(m({1, 0, 0}) > m({0, 1, 0}));
  CHECK(m({0, 0, 2}) > m({1, 0, 0}));
  CHECK(m({1, 0, 1}) < m({0, 2, 0}));  // degrevlex, not lex
  CHECK(m({2, 0, 0}) > m({1, 1, 0}));
  CHECK(m({1, 1, 0}) > m({0, 2, 0}));
  CHECK(m({1, 1, 0}).divides(m({2, 1, 3})));
  CHECK_FALSE(m({0, 2, 0}).divides(m({2, 1, 3})));
  CHECK(lcm(m({2, 0, 1}), m({1, 3, 0})) == m({2, 3, 1}));
  CHECK(count_monomials(4, 3) == 20);
  auto deg2 = monomials_of_degree(3, 2);
  REQUIRE(deg2.size() == 6);
  for (std::size_t k = 1; k < deg2.size(); ++k) CHECK(deg2[k - 1] > deg2[k]);
  CHECK(m({1, 0, 2}).to_string(3) == "x1*x3^2");
}

TEST_CASE("poly_arith examples") {
  auto x = vars(2);
  CHECK(poly_arith(x[0] + x[1], x[0] - x[1], ArithKind::mul) == x[0] * x[0] - x[1] * x[1]);
  Polynomial p = x[0] * x[1] + cst(2, 3);
  CHECK(poly_arith(p, Polynomial(2), ArithKind::add) == p);
  CHECK(poly_arith(p, p, ArithKind::sub).is_zero());
  Polynomial q = x[0] * x[1] * (x[0] - x[1]);
  CHECK(q.degree() == 3);
  CHECK(q.is_homogeneous());
  CHECK(q.to_string() == "x1^2*x2 - x1*x2^2");
  CHECK_THROWS_AS(x[0] + vars(3)[0], ArityMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> arity(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = arity(rng);
    auto a = testing_support::random_poly(rng, n, 4, 5);
    auto b = testing_support::random_poly(rng, n, 4, 5);
    auto c = testing_support::random_poly(rng, n, 4, 5);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
    for (const auto& t : (a * b).terms()) REQUIRE(t.coeff != 0);
  }
}

TEST_CASE("substitute_linear") {
  auto x = vars(2);
  Polynomial p = x[0] * x[0] - cst(2, 3) * x[0] * x[1];
  CHECK(substitute_linear(p, identity_matrix(2)) == p);
  RationalMatrix shear = {{1, 1}, {0, 1}};
  CHECK(substitute_linear(x[0], shear) == x[0] + x[1]);
  RationalMatrix swap = {{0, 1}, {1, 0}};
  Polynomial d = (x[0] - x[1]) * (x[0] - x[1]);
  CHECK(substitute_linear(d, swap) == d);
  CHECK(substitute_linear(p, shear).degree() == 2);
  CHECK(substitute_linear(p, shear).is_homogeneous());
  RationalMatrix singular = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(substitute_linear(p, singular), SingularMatrix);
}

TEST_CASE("exact_divide") {
  auto x = vars(2);
  auto q = exact_divide(x[0] * x[0] - x[1] * x[1], x[0] - x[1]);
  REQUIRE(q);
  CHECK(*q == x[0] + x[1]);
  Polynomial p = x[0] * x[1] * x[1] - cst(2, 7) * x[1];
  CHECK(*exact_divide(p, p) == cst(2, 1));
  CHECK_FALSE(exact_divide(x[0] * x[0] + x[1] * x[1], x[0] - x[1]));
  CHECK_THROWS_AS(exact_divide(p, Polynomial(2)), DivisionByZero);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing_support::random_poly(rng, 3, 3, 4);
    auto b = testing_support::random_poly(rng, 3, 3, 4);
    if (b.is_zero()) continue;
    auto r = exact_divide(a * b, b);
    REQUIRE(r);
    REQUIRE(*r == a);
  }
}

TEST_CASE("primitive and derivative") {
  auto x = vars(3);
  Polynomial p = Rational(-2, 3) * x[0] + Rational(4, 9) * x[2];
  CHECK(p.primitive() == cst(3, 3) * x[0] - cst(3, 2) * x[2]);
  CHECK((x[0] * x[0] * x[1]).derivative(0) == cst(3, 2) * x[0] * x[1]);
  CHECK(power(x[0] + x[1], 3).size() == 4);
}

TEST_CASE("linear algebra helpers") {
  RationalMatrix m = {{2, 1}, {1, 1}};
  CHECK(determinant(m) == 1);
  auto inv = inverse(m);
  CHECK(inv == RationalMatrix{{1, -1}, {-1, 2}});
  CHECK(rank(RationalMatrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}) == 2);
  CHECK(normalize_leading_one({0, 3, 6}) == RationalVector{0, 1, 2});
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}
