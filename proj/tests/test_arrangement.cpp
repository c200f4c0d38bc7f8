#include <algorithm>

#include "doctest.h"
#include "logder/arrangement.hpp"
#include "logder/arrangement_io.hpp"
#include "logder/error.hpp"
#include "logder/linalg.hpp"
#include "support.hpp"

using namespace logder;
using testing_support::vars;

namespace {

std::vector<std::string> sorted_forms(const Arrangement& a) {
  std::vector<std::string> out;
  for (const auto& h : a.hyperplanes()) out.push_back(h.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("make_arrangement normalizes and rejects duplicates") {
  auto a4 = corpus("A4").arrangement;
  CHECK(a4.size() == 10);
  CHECK(a4.dim() == 4);
  CHECK_THROWS_WITH_AS(make_arrangement(2, {{1, 0}, {2, 0}}), doctest::Contains("forms 0 and 1"), ArrangementError);
  CHECK_THROWS_AS(make_arrangement(2, {{0, 0}}), ArrangementError);
  auto empty = make_arrangement(3, {});
  CHECK(empty.empty());
  CHECK(empty.defining_polynomial() == testing_support::cst(3, 1));
  auto h = Hyperplane({0, Rational(-2), Rational(3, 2)});
  CHECK(h.coeffs() == RationalVector{0, 1, Rational(-3, 4)});
  CHECK(h.pivot() == 1);
}

TEST_CASE("defining polynomial") {
  auto x = vars(2);
  auto a = make_arrangement(2, {{1, 0}, {0, 1}, {1, -1}});
  CHECK(a.defining_polynomial() == x[0] * x[1] * (x[0] - x[1]));
  auto qa = corpus("A4").arrangement.defining_polynomial();
  CHECK(qa.degree() == 10);
  CHECK(qa.is_homogeneous());
  auto qb = corpus("B4").arrangement.defining_polynomial();
  CHECK(qb.degree() == 16);
  CHECK(qb.is_homogeneous());
}

TEST_CASE("deletion") {
  auto b4 = corpus("B4").arrangement;
  auto d = deletion(b4, Hyperplane({1, 0, 0, 0}));
  CHECK(d.size() == 15);
  for (const auto& h : d.hyperplanes()) CHECK(b4.contains(h));
  CHECK(deletion(make_arrangement(2, {{1, 1}}), 0).empty());
  CHECK_THROWS_AS(deletion(b4, Hyperplane({1, 2, 0, 0})), ArrangementError);
}

TEST_CASE("restriction of the A4 example") {
  auto e = corpus("ex-4.2");
  REQUIRE(e.distinguished);
  auto r = restrict_to(e.arrangement, *e.distinguished);
  CHECK(r.restricted.size() == 9);
  CHECK(r.restricted.dim() == 3);
  // Kept coordinates x2, x3, x4 are renamed x1, x2, x3.
  auto expected = make_arrangement(3, {{1, 0, 0},
                                       {0, 1, 0},
                                       {0, 0, 1},
                                       {1, -1, 0},
                                       {1, 0, -1},
                                       {0, 1, -1},
                                       {1, -2, 2},
                                       {1, -3, 2},
                                       {1, -2, 1}});
  CHECK(sorted_forms(r.restricted) == sorted_forms(expected));
  CHECK(canonical_form(r.restricted) == canonical_form(expected));
  // every hyperplane other than H lands somewhere, fibers partition them
  std::size_t covered = 0;
  for (const auto& f : r.fibers) covered += f.size();
  CHECK(covered == 10);
  CHECK(r.image[*e.distinguished] == -1);
}

TEST_CASE("restriction counts") {
  auto g = corpus("generic-4-7").arrangement;
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(restrict_to(g, k).restricted.size() == 6);
  auto b4 = corpus("B4").arrangement;
  // B4 restricted to x1 = 0 is B3
  CHECK(restrict_to(b4, 0).restricted.size() == 9);
  CHECK(canonical_form(restrict_to(b4, 0).restricted) == canonical_form(corpus("B3").arrangement));
  auto c = corpus("ex-4.3-C");
  CHECK(c.arrangement.size() == 17);
  CHECK(restrict_to(c.arrangement, *c.distinguished).restricted.size() == 9);
}

TEST_CASE("terao_B degrees") {
  auto e = corpus("ex-4.2");
  auto b = terao_B(e.arrangement, *e.distinguished);
  CHECK(b.degree() == 1);
  CHECK(b.leading_coeff() == 1);
  auto g = corpus("generic-3-5").arrangement;
  CHECK(terao_B(g, 2) == testing_support::cst(2, 1));
  // B4 plus L, H = x1: 17 - 1 - 9 = 7
  auto c = corpus("ex-4.3-C");
  CHECK(terao_B(c.arrangement, *c.distinguished).degree() == 7);
}

TEST_CASE("restriction and B are consistent on the corpus") {
  for (const auto& name : corpus_names()) {
    auto a = corpus(name).arrangement;
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto r = restrict_to(a, k);
      auto b = terao_B(a, r);
      REQUIRE(r.restricted.size() + static_cast<std::size_t>(b.degree()) == a.size() - 1);
      // change of coordinates z = M x; write Q' in z and set z_1 = 0
      Polynomial qprime = deletion(a, k).defining_polynomial();
      Polynomial inz = substitute_linear(qprime, inverse(r.change));
      std::vector<Polynomial> images;
      images.emplace_back(a.dim() - 1);
      for (int i = 0; i + 1 < a.dim(); ++i) images.push_back(Polynomial::variable(a.dim() - 1, i));
      Polynomial on_h = compose(inz, images);
      Polynomial rhs = b * r.restricted.defining_polynomial();
      REQUIRE(on_h.monic() == rhs.monic());
    }
  }
}

TEST_CASE("reduce_mod drops the pivot variable and vanishes on multiples of alpha") {
  auto e = corpus("ex-4.2");
  auto r = restrict_to(e.arrangement, *e.distinguished);
  auto x = vars(4);
  Polynomial alpha = e.arrangement[*e.distinguished].form();
  CHECK(r.reduce_mod(alpha * (x[0] * x[1] + x[3])).is_zero());
  Polynomial p = x[0] * x[0] + x[2];
  Polynomial red = r.reduce_mod(p);
  CHECK(red.derivative(r.pivot).is_zero());
  CHECK(exact_divide(p - red, alpha));
}

TEST_CASE("canonical form") {
  auto a = make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}});
  auto b = make_arrangement(2, {{1, 1}, {2, 0}, {0, -3}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) != canonical_form(deletion(a, 0)));
}

TEST_CASE("corpus") {
  auto e45 = corpus("ex-4.5");
  CHECK(e45.arrangement.size() == 12);
  CHECK(deletion(e45.arrangement, *e45.distinguished).size() == 11);
  CHECK(e45.arrangement[*e45.distinguished] == Hyperplane({0, 1, 1, 1}));
  auto x = vars(4);
  Polynomial q = x[0] + x[1] + x[2] + x[3];
  for (int i = 0; i < 4; ++i) q *= x[i];
  for (int i = 1; i < 4; ++i) q *= x[0] + x[i];
  for (int i = 1; i < 4; ++i) q *= x[0] + x[1] + x[2] + x[3] - x[i];
  CHECK(deletion(e45.arrangement, *e45.distinguished).defining_polynomial() == q);

  CHECK(corpus("boolean-3").arrangement == make_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto h1 = corpus("ex-4.6-H1");
  CHECK(h1.arrangement.size() == 23);
  CHECK(h1.arrangement[*h1.distinguished] == Hyperplane({0, 1, 1, 7}));
  auto d46 = deletion(h1.arrangement, *h1.distinguished);
  CHECK(d46.size() == 22);
  Polynomial q46 = x[0] * x[1] * x[2] * x[3];
  auto sq = [](const Polynomial& p) { return p * p; };
  for (int i = 0; i < 3; ++i) q46 *= (sq(x[i]) - sq(x[3])) * (sq(x[i]) - testing_support::cst(4, 4) * sq(x[3]));
  for (int i = 1; i < 3; ++i) q46 *= sq(x[i]) - testing_support::cst(4, 9) * sq(x[3]);
  q46 *= sq(x[2]) - testing_support::cst(4, 16) * sq(x[3]);
  CHECK(d46.defining_polynomial() == q46);
  CHECK(corpus("ex-4.6-H2").arrangement[22] == Hyperplane({1, 1, 1, 0}));
  CHECK(corpus("ex-4.3").arrangement.size() == 16);
  CHECK(corpus("ex-4.4").arrangement.size() == 11);
  CHECK_THROWS_AS(corpus("nope"), ArrangementError);
}

TEST_CASE("arrangement file format") {
  auto f = parse_arrangement("# A2\ndimension = 2\nhyperplanes = [[1, 0], [0, 1],\n  [1/2, -1/2]]\ndistinguished = 2\n");
  CHECK(f.arrangement.size() == 3);
  CHECK(f.arrangement[2] == Hyperplane({1, -1}));
  CHECK(f.distinguished == 2u);
  auto back = parse_arrangement(format_arrangement(f.arrangement, f.distinguished));
  CHECK(back.arrangement == f.arrangement);
  CHECK(back.distinguished == f.distinguished);
  auto e = corpus("ex-4.6-H2");
  CHECK(parse_arrangement(format_arrangement(e.arrangement)).arrangement == e.arrangement);

  auto fails_at = [](const std::string& text, int line, int col) {
    try {
      parse_arrangement(text);
    } catch (const ParseError& err) {
      CHECK(err.line() == line);
      CHECK(err.column() == col);
      return;
    }
    FAIL("no parse error for: " << text);
  };
  fails_at("", 1, 1);
  fails_at("dimension = 2\n", 2, 1);
  fails_at("dimension = 2\nhyperplanes = [[1, 0], [0, 1]]\ncolor = 3\n", 3, 1);
  fails_at("dimension = 2\nhyperplanes = [[1, 0], [0, x]]\n", 2, 28);
  fails_at("dimension = 2\nhyperplanes = [[1, 0], [2, 0]]\n", 2, 24);
  fails_at("dimension = 2\nhyperplanes = [[1, 0], [0, 1, 1]]\n", 2, 24);
  fails_at("dimension = 2\nhyperplanes = [[1, 0], [1/0, 1]]\n", 2, 25);
  fails_at("dimension = 2\ndimension = 3\n", 2, 1);
  fails_at("dimension = 2\nhyperplanes = [[1, 0]]\ndistinguished = 1\n", 3, 17);
  fails_at("dimension = 2\nhyperplanes = [[1, 0],]\n", 2, 23);
}
