#include <algorithm>

#include "doctest.h"
#include "logder/derivmod.hpp"
#include "logder/error.hpp"
#include "logder/groebner.hpp"
#include "support.hpp"

using namespace logder;
using testing_support::vars;

namespace {

using Degrees = std::vector<int>;

Arrangement deletion_of(const std::string& name) {
  auto e = corpus(name);
  return deletion(e.arrangement, *e.distinguished);
}

Arrangement restriction_of(const std::string& name) {
  auto e = corpus(name);
  return restrict_to(e.arrangement, *e.distinguished).restricted;
}

}  // namespace

TEST_CASE("derivation basics") {
  auto x = vars(3);
  Derivation e = Derivation::euler(3);
  CHECK(e.degree() == 1);
  CHECK(e.apply(x[0] * x[1]) == testing_support::cst(3, 2) * x[0] * x[1]);
  CHECK(e.apply_form({1, -2, 3}) == x[0] - testing_support::cst(3, 2) * x[1] + testing_support::cst(3, 3) * x[2]);
  Derivation d = Derivation::partial(3, 1).times(x[0]);
  CHECK(d.to_string() == "(x1)*D2");
  CHECK(Derivation::from_vector(d.to_vector()) == d);
  CHECK(Derivation::zero(2).degree() == -1);
  CHECK_THROWS_AS(Derivation({x[0], x[1]}), ArityMismatch);
  Derivation mixed({x[0] * x[0], x[1], Polynomial(3)});
  CHECK_FALSE(mixed.is_homogeneous());
}

TEST_CASE("free examples") {
  CHECK(is_free(corpus("A4").arrangement) == Degrees{1, 2, 3, 4});
  CHECK(is_free(corpus("boolean-4").arrangement) == Degrees{1, 1, 1, 1});
  CHECK(is_free(corpus("B3").arrangement) == Degrees{1, 3, 5});
  CHECK(is_free(make_arrangement(3, {})) == Degrees{0, 0, 0});
  CHECK(is_free(deletion_of("ex-4.3")) == Degrees{1, 3, 5, 6});
  CHECK(is_free(deletion_of("ex-4.5")) == Degrees{1, 3, 3, 4});
  CHECK(is_free(deletion_of("ex-4.6-H1")) == Degrees{1, 5, 7, 9});
  CHECK_FALSE(is_free(corpus("generic-3-4").arrangement));
  CHECK_FALSE(is_free(corpus("ex-4.2").arrangement));
}

TEST_CASE("SPOG detection") {
  auto s = is_spog(corpus("ex-4.2").arrangement);
  REQUIRE(s);
  CHECK(s->poexp == Degrees{1, 3, 4, 4});
  CHECK(s->level == 4);
  s = is_spog(corpus("ex-4.4").arrangement);
  REQUIRE(s);
  CHECK(s->poexp == Degrees{1, 3, 4, 4});
  CHECK(s->level == 5);
  CHECK_FALSE(is_spog(corpus("A4").arrangement));
  CHECK_FALSE(is_spog(corpus("ex-4.5").arrangement));

  auto p = derivation_module(corpus("ex-4.2").arrangement);
  REQUIRE(p.spog());
  CHECK(p.generators[p.spog()->level_generator].degree() == 4);
  CHECK(p.relation_degrees() == Degrees{5});
  auto no_rel = derivation_module(corpus("ex-4.2").arrangement, {Route::syzygy_system, false});
  CHECK_THROWS_AS(no_rel.spog(), PreconditionError);
}

TEST_CASE("g and Betti data") {
  CHECK(g_of(corpus("A4").arrangement) == 4);
  CHECK(g_of(corpus("ex-4.2").arrangement) == 5);
  CHECK(g_of(corpus("ex-4.6-H2").arrangement) == 6);

  auto b45 = betti(corpus("ex-4.5").arrangement);
  REQUIRE(b45.d0);
  CHECK(b45.d0->generators == Degrees{4, 4, 4, 5, 5});
  CHECK(b45.d0->relations == Degrees{5, 6});
  CHECK(b45.d.generators == Degrees{1, 4, 4, 4, 5, 5});

  auto b46 = betti(corpus("ex-4.6-H2").arrangement);
  REQUIRE(b46.d0);
  CHECK(b46.d0->generators == Degrees{6, 8, 10, 10, 11});
  CHECK(b46.d0->relations == Degrees{11, 12});

  CHECK(betti(corpus("B4").arrangement).d.relations.empty());
  auto empty = betti(make_arrangement(2, {}));
  CHECK_FALSE(empty.d0);
  auto boolean = betti(corpus("boolean-3").arrangement);
  REQUIRE(boolean.d0);
  CHECK(boolean.d0->generators == Degrees{1, 1});
}

TEST_CASE("both routes give the same module") {
  for (const auto& name : corpus_names()) {
    auto a = corpus(name).arrangement;
    auto sys = derivation_module(a, {Route::syzygy_system, true});
    auto it = derivation_module(a, {Route::iterated, true});
    CHECK(sys.generator_degrees() == it.generator_degrees());
    CHECK(sys.relation_degrees() == it.relation_degrees());
    // same submodule: each generating set reduces to zero modulo the other
    std::vector<ModuleVector> gs, gi;
    for (const auto& g : sys.generators) gs.push_back(g.to_vector());
    for (const auto& g : it.generators) gi.push_back(g.to_vector());
    auto bs = groebner_basis(gs);
    auto bi = groebner_basis(gi);
    CHECK(bs == bi);
  }
}

TEST_CASE("membership") {
  auto a = corpus("ex-4.6-H1").arrangement;
  CHECK(membership(Derivation::euler(4), a));
  auto x = vars(2);
  auto line = make_arrangement(2, {{1, 0}});
  CHECK_FALSE(membership(Derivation::partial(2, 0).times(x[1]), line));
  CHECK(membership(Derivation::partial(2, 0).times(x[0]), line));
  for (const auto& g : derivation_module(corpus("ex-4.5").arrangement).generators) CHECK(membership(g, corpus("ex-4.5").arrangement));
}

TEST_CASE("Saito criterion") {
  auto x = vars(3);
  auto b3 = corpus("boolean-3").arrangement;
  std::vector<Derivation> diag;
  for (int i = 0; i < 3; ++i) diag.push_back(Derivation::partial(3, i).times(x[i]));
  CHECK(saito_check(diag, b3));
  std::vector<Derivation> dependent{Derivation::euler(3), Derivation::euler(3).times(x[0]), Derivation::euler(3).times(x[1])};
  CHECK_FALSE(saito_check(dependent, b3));
  std::vector<Derivation> outside{Derivation::partial(3, 0), diag[1], diag[2]};
  CHECK_THROWS_AS(saito_check(outside, b3), PreconditionError);
  CHECK_THROWS_AS(saito_check(std::vector<Derivation>(diag.begin(), diag.begin() + 2), b3), PreconditionError);

  // Independent determinant: cofactor expansion of the computed basis.
  auto del = deletion_of("ex-4.5");
  auto basis = derivation_module(del).generators;
  CHECK(saito_check(basis, del));
  auto m = [&](int i, int j) { return basis[i][j]; };
  Polynomial det(4);
  const int perms[24][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
                            {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
                            {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
                            {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  for (const auto& p : perms) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    Polynomial term = m(0, p[0]) * m(1, p[1]) * m(2, p[2]) * m(3, p[3]);
    det += inversions % 2 ? -term : term;
  }
  auto q = exact_divide(det, del.defining_polynomial());
  REQUIRE(q);
  CHECK(q->is_constant());
  CHECK_FALSE(q->is_zero());
}

TEST_CASE("NT counts and adaptation") {
  auto e = corpus("ex-4.2");
  const std::size_t k = *e.distinguished;
  auto basis = derivation_module(deletion(e.arrangement, k)).generators;
  auto adapted = nt_adapt(basis, e.arrangement, k);
  CHECK(adapted.failing.size() == 2);
  CHECK(nt_count(adapted.basis, e.arrangement, k) == 2);
  CHECK(nt_count(basis, e.arrangement, k) >= 2);

  auto b3 = corpus("boolean-3").arrangement;
  auto bb = derivation_module(deletion(b3, 2)).generators;
  CHECK(nt_count(bb, b3, 2) == 1);
  std::vector<Derivation> not_basis{Derivation::euler(3), Derivation::euler(3), Derivation::euler(3)};
  CHECK_THROWS_AS(nt_count(not_basis, b3, 2), PreconditionError);
}

TEST_CASE("Euler restriction") {
  auto e = corpus("ex-4.2");
  const std::size_t k = *e.distinguished;
  auto r = restrict_to(e.arrangement, k);
  CHECK(euler_restriction(Derivation::euler(4), e.arrangement, r) == Derivation::euler(3));
  const Polynomial alpha = e.arrangement[k].form();
  for (const auto& g : derivation_module(deletion(e.arrangement, k)).generators) {
    auto rho = euler_restriction(g.times(alpha), e.arrangement, r);
    CHECK(rho.is_zero());
  }
  for (const auto& g : derivation_module(e.arrangement).generators)
    CHECK(membership(euler_restriction(g, e.arrangement, r), r.restricted));
  CHECK_THROWS_AS(euler_restriction(Derivation::partial(4, 0), e.arrangement, r), PreconditionError);
}

TEST_CASE("free surjection") {
  auto e42 = corpus("ex-4.2");
  CHECK(fst_check(e42.arrangement, *e42.distinguished));
  auto e45 = corpus("ex-4.5");
  CHECK(fst_check(e45.arrangement, *e45.distinguished));
  auto b3 = corpus("boolean-3").arrangement;
  for (std::size_t k = 0; k < 3; ++k) CHECK(fst_check(b3, k));
  CHECK_THROWS_AS(fst_check(corpus("generic-3-5").arrangement, 0), PreconditionError);
}

TEST_CASE("SPOG generators from a basis with two failures") {
  auto e = corpus("ex-4.2");
  auto c = spog_generators_from_basis(e.arrangement, *e.distinguished);
  REQUIRE(c.applicable);
  CHECK(c.poexp == Degrees{1, 3, 4, 4});
  CHECK(c.level == 4);
  CHECK(c.b.degree() == 1);
  CHECK(gcd_pair(c.g_i, c.g_j).is_constant());
  CHECK(c.spog_generators.size() == 4);
  for (const auto& d : c.spog_generators) CHECK(membership(d, e.arrangement));
  CHECK(membership(c.level_element, e.arrangement));
  CHECK(spog_quotient_basis_check(e.arrangement, *e.distinguished));

  auto e44 = corpus("ex-4.4");
  auto c44 = spog_generators_from_basis(e44.arrangement, *e44.distinguished);
  REQUIRE(c44.applicable);
  CHECK(c44.level == 5);
  CHECK(c44.poexp == Degrees{1, 3, 4, 4});

  auto b3 = corpus("boolean-3").arrangement;
  auto none = spog_generators_from_basis(b3, 2);
  CHECK_FALSE(none.applicable);
  CHECK(none.reason.find("1 basis") != std::string::npos);
  CHECK_FALSE(spog_generators_from_basis(corpus("generic-3-5").arrangement, 0).applicable);
  CHECK_THROWS_AS(spog_quotient_basis_check(b3, 2), PreconditionError);
}

TEST_CASE("slice oracle") {
  CHECK(graded_slice_oracle(corpus("boolean-4").arrangement, 1) == 4);
  CHECK(graded_slice_oracle(corpus("boolean-4").arrangement, 0) == 0);
  CHECK(graded_slice_oracle(make_arrangement(3, {}), 2) == 18);
  // Hilbert function of S[-1] + S[-2] + S[-3] + S[-4] in four variables
  const Degrees exps{1, 2, 3, 4};
  for (int d = 0; d <= 6; ++d)
    CHECK(graded_slice_oracle(corpus("A4").arrangement, d) == free_hilbert(4, exps, d));
  auto p = derivation_module(corpus("ex-4.2").arrangement);
  CHECK(graded_slice_oracle(corpus("ex-4.2").arrangement, 4) == p.hilbert_function(4));
  const Degrees gens{1, 3, 4, 4, 4}, rels{5};
  for (int d = 0; d <= 7; ++d)
    CHECK(p.hilbert_function(d) == free_hilbert(4, gens, d) - free_hilbert(4, rels, d));
}

TEST_CASE("oracle agrees with the presentation on small arrangements") {
  for (const char* name : {"A3", "B3", "generic-3-4", "generic-3-5", "ex-4.4"}) {
    auto a = corpus(name).arrangement;
    auto p = derivation_module(a);
    int top = p.generator_degrees().back() + 2;
    auto hv = p.hilbert_values(top);
    for (int d = 0; d <= top; ++d) CHECK(graded_slice_oracle(a, d) == hv[d]);
  }
}

TEST_CASE("resolution shape for free deletion and restriction") {
  auto e = corpus("ex-4.5");
  CHECK(is_free(deletion(e.arrangement, *e.distinguished)));
  CHECK(is_free(restriction_of("ex-4.5")) == Degrees{1, 4, 5});
  auto p = derivation_module(e.arrangement);
  CHECK(p.relations_free());
  // at most 2l - 2 generators
  CHECK(p.g() <= 6);
  CHECK(derivation_module(corpus("A4").arrangement).relations_free());
}
