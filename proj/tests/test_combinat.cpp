#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "logder/combinat.hpp"
#include "logder/error.hpp"
#include "support.hpp"

using namespace logder;

namespace {

// Stirling numbers of the second kind by the usual recurrence.
std::int64_t stirling2(int n, int k) {
  std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

// Flats by brute force: close every subset of hyperplanes by rank tests.
std::map<int, std::set<std::uint64_t>> brute_flats(const Arrangement& a) {
  const std::size_t n = a.size();
  std::map<int, std::set<std::uint64_t>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<RationalVector> rows;
    for (std::size_t k = 0; k < n; ++k)
      if (s >> k & 1u) rows.push_back(a[k].coeffs());
    int r = static_cast<int>(testing_support::brute_rank(rows));
    std::uint64_t closure = 0;
    for (std::size_t k = 0; k < n; ++k) {
      auto with = rows;
      with.push_back(a[k].coeffs());
      if (static_cast<int>(testing_support::brute_rank(with)) == r) closure |= std::uint64_t{1} << k;
    }
    out[r].insert(closure);
  }
  return out;
}

Arrangement random_arrangement(std::mt19937& rng, int l, int n) {
  std::uniform_int_distribution<int> c(-2, 2);
  std::vector<RationalVector> forms;
  while (static_cast<int>(forms.size()) < n) {
    RationalVector v(l);
    for (auto& x : v) x = c(rng);
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
    Hyperplane h(v);
    bool dup = false;
    for (const auto& f : forms) dup = dup || Hyperplane(f) == h;
    if (!dup) forms.push_back(v);
  }
  return make_arrangement(l, forms);
}

}  // namespace

TEST_CASE("boolean and empty lattices") {
  auto L = FlatLattice::build(corpus("boolean-3").arrangement);
  CHECK(L.size() == 8);
  CHECK(L.rank_sizes() == std::vector<std::size_t>{1, 3, 3, 1});
  auto E = FlatLattice::build(make_arrangement(3, {}));
  CHECK(E.size() == 1);
  CHECK(E.flats()[0].mobius == 1);
  CHECK(characteristic_polynomial(E) == CharPoly{{0, 0, 0, 1}});
  CHECK(characteristic_polynomial(E).to_string() == "t^3");
}

TEST_CASE("A4 lattice is the partition lattice of five points") {
  auto L = FlatLattice::build(corpus("A4").arrangement);
  CHECK(L.size() == 52);
  auto sizes = L.rank_sizes();
  REQUIRE(sizes.size() == 5);
  // rank r flats <-> partitions of 5 points into 5 - r blocks
  for (int r = 0; r <= 4; ++r) CHECK(static_cast<std::int64_t>(sizes[r]) == stirling2(5, 5 - r));
  CHECK(sizes == std::vector<std::size_t>{1, 10, 25, 15, 1});
}

TEST_CASE("lattice agrees with brute-force closure") {
  for (const char* name : {"A3", "B3", "generic-3-5", "boolean-4", "ex-4.4"}) {
    auto a = corpus(name).arrangement;
    auto L = FlatLattice::build(a);
    auto brute = brute_flats(a);
    std::map<int, std::set<std::uint64_t>> ours;
    for (const auto& f : L.flats()) ours[f.rank].insert(f.members);
    CHECK(ours == brute);
  }
}

TEST_CASE("characteristic polynomial examples") {
  auto chi = characteristic_polynomial(corpus("A4").arrangement);
  CHECK(chi == CharPoly::from_roots({1, 2, 3, 4}));
  CHECK(chi.to_string() == "(t - 1)(t - 2)(t - 3)(t - 4)");
  CHECK(chi.expanded() == "t^4 - 10t^3 + 35t^2 - 50t + 24");

  auto e = corpus("ex-4.2");
  auto r = restrict_to(e.arrangement, *e.distinguished);
  auto chiH = characteristic_polynomial(r.restricted);
  CHECK(chiH == CharPoly::from_roots({1, 4, 4}));
  CHECK(chiH.to_string() == "(t - 1)(t - 4)^2");

  auto generic = characteristic_polynomial(corpus("generic-3-4").arrangement);
  CHECK_FALSE(generic.integer_roots());
  CHECK(generic.to_string() == generic.expanded());
}

TEST_CASE("charpoly divisibility") {
  auto a = CharPoly::from_roots({1, 4});
  auto b = CharPoly::from_roots({1, 4, 4});
  CHECK(charpoly_divides(a, b));
  CHECK(*charpoly_quotient(b, a) == CharPoly::from_roots({4}));
  CHECK_FALSE(charpoly_divides(CharPoly::from_roots({2}), CharPoly::from_roots({1, 1, 1})));
  CHECK(charpoly_divides(b, b));
  CHECK(*charpoly_quotient(b, b) == CharPoly{{1}});
}

TEST_CASE("lattice isomorphism") {
  auto a = corpus("ex-4.4").arrangement;
  std::vector<RationalVector> forms;
  for (std::size_t k = a.size(); k-- > 0;) forms.push_back(a[k].coeffs());
  auto permuted = make_arrangement(4, forms);
  CHECK(lattice_isomorphic(FlatLattice::build(a), FlatLattice::build(permuted)));

  CHECK(lattice_isomorphic(FlatLattice::build(corpus("boolean-3").arrangement),
                           FlatLattice::build(corpus("generic-3-3").arrangement)));
  // Ten hyperplanes in dimension 4 with different lattices.
  auto a4 = FlatLattice::build(corpus("A4").arrangement);
  auto g = FlatLattice::build(corpus("generic-4-10").arrangement);
  CHECK(a4.size() != g.size());
  CHECK_FALSE(lattice_isomorphic(a4, g));
  auto ex42 = FlatLattice::build(corpus("ex-4.2").arrangement);
  auto ex44 = FlatLattice::build(corpus("ex-4.4").arrangement);
  CHECK_FALSE(lattice_isomorphic(ex42, ex44));
  CHECK_THROWS_AS(lattice_isomorphic(a4, a4, 10), LatticeTooLarge);
}

TEST_CASE("deletion-restriction recurrence and Mobius sanity on the corpus") {
  std::vector<Arrangement> cases;
  for (const auto& name : corpus_names()) cases.push_back(corpus(name).arrangement);
  std::mt19937 rng(42);
  for (int t = 0; t < 40; ++t) cases.push_back(random_arrangement(rng, 3, 3 + t % 5));
  for (const auto& a : cases) {
    auto L = FlatLattice::build(a);
    auto chi = characteristic_polynomial(L);
    CHECK(chi.coeffs.back() == 1);
    CHECK(chi.degree() == a.dim());
    if (!a.empty()) CHECK(chi.evaluate(1) == 0);
    std::int64_t atoms = 0;
    for (const auto& f : L.flats()) {
      if (f.rank == 1) {
        CHECK(f.mobius == -1);
        atoms -= f.mobius;
      }
      if (f.mobius != 0) CHECK((f.rank % 2 == 0) == (f.mobius > 0));
    }
    CHECK(atoms == static_cast<std::int64_t>(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto del = characteristic_polynomial(deletion(a, k));
      auto res = characteristic_polynomial(restrict_to(a, k).restricted);
      // chi(A) = chi(A') - chi(A^H)
      for (int d = 0; d <= a.dim(); ++d) {
        std::int64_t rhs = del.coeffs[d] - (d <= res.degree() ? res.coeffs[d] : 0);
        REQUIRE(chi.coeffs[d] == rhs);
      }
    }
  }
}
