#include "logder/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "logder/combinat.hpp"
#include "logder/derivmod.hpp"
#include "logder/error.hpp"
#include "logder/linalg.hpp"
#include "logder/theorems.hpp"

namespace logder {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "ex-4.2", "A4 plus x1 - x2 + 2x3 - 2x4: SPOG (1,3,4,4) level 4, divisionally free restriction"},
      {2, "ex-4.3", "B4 minus x1 plus x1 + x2 + x3: SPOG (1,4,5,7) level 7; adding x1 gives free (1,4,5,7)"},
      {3, "ex-4.4", "A4 plus x1 + x2 + x3: SPOG (1,3,4,4) level 5 not predicted from exponents"},
      {4, "ex-4.5", "free (1,3,3,4) plus one form: not SPOG although deletion and restriction are free"},
      {5, "ex-4.6", "free (1,5,7,9) plus H1 is SPOG level 15; plus H2 has g = 6 and free restriction"},
      {6, "oracle", "graded slice oracle equals the presentation's Hilbert function on the corpus"},
      {7, "properties", "structural theorems on the corpus and on random 3-arrangements"},
      {8, "certify", "stair-SPOG certificates for ex-4.2 and ex-4.3, none for ex-4.4; replay verifies"},
  };
  return list;
}

std::string show(const std::optional<std::vector<int>>& e) { return e ? format_exponents(*e) : "not free"; }

std::string show(const std::optional<SpogData>& s) {
  return s ? Claim{Claim::Kind::spog, s->poexp, s->level}.to_string() : "not SPOG";
}

std::string show(const std::optional<SpogPrediction>& m) {
  return m ? Claim{Claim::Kind::spog, m->poexp, m->level}.to_string() : "not applicable";
}

std::string show_multiset(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

std::string seconds_string(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

class Rows {
 public:
  void add(std::string check, std::string expected, std::string actual) {
    bool pass = expected == actual;
    rows_.push_back({std::move(check), std::move(expected), std::move(actual), pass});
  }
  void add(std::string check, std::string expected, std::string actual, bool pass) {
    rows_.push_back({std::move(check), std::move(expected), std::move(actual), pass});
  }
  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  std::vector<SuiteRow> rows_;
};

Arrangement deletion_of(const Arrangement& a) { return deletion(a, a.size() - 1); }
Arrangement restriction_of(const Arrangement& a) { return restrict_to(a, a.size() - 1).restricted; }

std::string betti_d0(const Arrangement& a) {
  auto b = betti(a);
  if (!b.d0) return "none";
  return "generators " + show_multiset(b.d0->generators) + ", relations " + show_multiset(b.d0->relations);
}

void example_42(Rows& rows, const SuiteOptions& opt) {
  const Arrangement b = suite_arrangement("ex-4.2", opt);
  const Arrangement a4 = deletion_of(b);
  const Arrangement bh = restriction_of(b);
  rows.add("is_free(A4)", "(1,2,3,4)", show(is_free(a4)));
  rows.add("|B^H|", "9", std::to_string(bh.size()));
  auto ebh = is_free(bh);
  rows.add("is_free(B^H)", "(1,4,4)", show(ebh));
  rows.add("chi(B^H)", "(t - 1)(t - 4)^2", characteristic_polynomial(bh).to_string());
  std::string division = "no hyperplane x2 = 0 in B^H";
  if (auto l = bh.index_of(Hyperplane({1, 0, 0}))) {
    auto v = division_check(bh, *l);
    const Arrangement c = restrict_to(bh, *l).restricted;
    division = std::string(v.holds ? "holds" : "fails") + ", chi(C) = " + characteristic_polynomial(c).to_string();
  }
  rows.add("division at L: x2 = 0 of B^H", "holds, chi(C) = (t - 1)(t - 4)", division);
  rows.add("is_spog(B)", "spog POexp (1,3,4,4) level 4", show(is_spog(b)));
  rows.add("spog_match((1,2,3,4), (1,4,4), 10, 9)", "spog POexp (1,3,4,4) level 4",
           show(spog_match({1, 2, 3, 4}, {1, 4, 4}, 10, 9)));
  std::optional<SpogPrediction> computed;
  if (auto ed = is_free(a4); ed && ebh)
    computed = spog_match(*ed, *ebh, static_cast<std::int64_t>(a4.size()), static_cast<std::int64_t>(bh.size()));
  rows.add("spog_match on the computed exp(A4), exp(B^H)", "spog POexp (1,3,4,4) level 4", show(computed));
}

void example_43(Rows& rows, const SuiteOptions&) {
  const Arrangement b = corpus("ex-4.3").arrangement;
  rows.add("is_free(B4 minus x1)", "(1,3,5,6)", show(is_free(deletion_of(b))));
  rows.add("is_free(B^L), L: x1 + x2 + x3", "(1,5,7)", show(is_free(restriction_of(b))));
  rows.add("is_spog(B)", "spog POexp (1,4,5,7) level 7", show(is_spog(b)));
  const Arrangement c = corpus("ex-4.3-C").arrangement;
  rows.add("is_free(C = B + x1)", "(1,4,5,7)", show(is_free(c)));
  rows.add("|C^{x1}|", "9", std::to_string(restriction_of(c).size()));
  for (const auto& step : b4_deletion_freeness_argument())
    rows.add("argument: " + step.claim, step.expected, step.actual, step.pass);
}

void example_44(Rows& rows, const SuiteOptions&) {
  const Arrangement b = corpus("ex-4.4").arrangement;
  rows.add("is_free(B^H)", "(1,4,5)", show(is_free(restriction_of(b))));
  rows.add("is_spog(B)", "spog POexp (1,3,4,4) level 5", show(is_spog(b)));
  rows.add("spog_match((1,2,3,4), (1,4,5), 10, 10)", "not applicable",
           show(spog_match({1, 2, 3, 4}, {1, 4, 5}, 10, 10)));
}

void example_45(Rows& rows, const SuiteOptions&) {
  const Arrangement a = corpus("ex-4.5").arrangement;
  rows.add("is_free(A')", "(1,3,3,4)", show(is_free(deletion_of(a))));
  rows.add("is_free(A^H)", "(1,4,5)", show(is_free(restriction_of(a))));
  rows.add("is_spog(A)", "not SPOG", show(is_spog(a)));
  rows.add("betti D0(A)", "generators {4,4,4,5,5}, relations {5,6}", betti_d0(a));
  auto p = spog_predict({1, 3, 3, 4}, 11, 10);
  bool has_23 = std::any_of(p.begin(), p.end(), [](const SpogPrediction& q) { return q.i == 2 && q.j == 3; });
  rows.add("spog_predict((1,3,3,4), 11, 10) pair (2,3)", "excluded, d = 5 > d4 = 4",
           has_23 ? "listed" : "excluded, d = 5 > d4 = 4");
}

void example_46(Rows& rows, const SuiteOptions&) {
  const Arrangement a1 = corpus("ex-4.6-H1").arrangement;
  const Arrangement a2 = corpus("ex-4.6-H2").arrangement;
  rows.add("is_free(A')", "(1,5,7,9)", show(is_free(deletion_of(a1))));
  rows.add("is_spog(A1)", "spog POexp (1,5,8,10) level 15", show(is_spog(a1)));
  rows.add("is_free(A1^H1)", "(1,5,15)", show(is_free(restriction_of(a1))));
  auto e2 = is_free(restriction_of(a2));
  rows.add("is_free(A2^H2)", "(1,10,11)", show(e2));
  rows.add("betti D0(A2)", "generators {6,8,10,10,11}, relations {11,12}", betti_d0(a2));
  const std::size_t g = g_of(a2);
  rows.add("g(A2)", "6", std::to_string(g));
  const bool instance = is_free(deletion_of(a2)) && g <= 6 && e2;
  rows.add("A2' free, g(A2) <= l + 2 = 6 and A2^H2 free", "true", instance ? "true" : "false");
}

void oracle_agreement(Rows& rows, const SuiteOptions&) {
  for (const auto& name : corpus_names()) {
    const Arrangement a = corpus(name).arrangement;
    const Presentation p = derivation_module(a);
    const auto degrees = p.generator_degrees();
    const int top = (degrees.empty() ? 0 : degrees.back()) + 2;
    std::string actual = "agrees";
    for (int d = 0; d <= top; ++d) {
      const auto h = p.hilbert_function(d);
      const auto o = graded_slice_oracle(a, d);
      if (h != o) {
        actual = "differs at degree " + std::to_string(d) + ": presentation " + std::to_string(h) + ", oracle " +
                 std::to_string(o);
        break;
      }
    }
    rows.add(name + ": dim D(A)_d for d <= " + std::to_string(top), "agrees", actual);
  }
}

void properties(Rows& rows, const SuiteOptions& opt) {
  std::vector<PropertyTally> corpus_tallies;
  for (const auto& name : corpus_names()) check_properties(corpus(name).arrangement, name, corpus_tallies);
  const auto random = random_arrangements(opt.random_cases, opt.seed);
  std::vector<PropertyTally> random_tallies;
  for (std::size_t k = 0; k < random.size(); ++k)
    check_properties(random[k], "random #" + std::to_string(k), random_tallies);
  rows.add("random arrangements checked", ">= " + std::to_string(opt.random_cases),
           std::to_string(random.size()), random.size() >= opt.random_cases);
  auto emit = [&](const std::vector<PropertyTally>& tallies, const std::string& scope) {
    for (const auto& t : tallies) {
      std::string actual = std::to_string(t.violations) + " violations in " + std::to_string(t.instances);
      if (t.violations) actual += "; first: " + t.first_violation;
      rows.add(scope + ": " + t.property, "0 violations", actual, t.violations == 0);
    }
  };
  emit(corpus_tallies, "corpus");
  emit(random_tallies, "random");
}

void certification(Rows& rows, const SuiteOptions& opt) {
  struct Case {
    const char* name;
    const char* expected;
  };
  for (const Case& c : {Case{"ex-4.2", "spog POexp (1,3,4,4) level 4"}, Case{"ex-4.3", "spog POexp (1,4,5,7) level 7"},
                        Case{"ex-4.4", "no certificate found"}}) {
    const Arrangement a = suite_arrangement(c.name, opt);
    auto r = stair_spog_certify(a);
    std::string actual = r.status == SearchResult::Status::found ? r.certificate->nodes[r.certificate->root].claim.to_string()
                         : r.status == SearchResult::Status::not_found ? "no certificate found"
                                                                        : "budget exhausted";
    rows.add(std::string("stair_spog_certify(") + c.name + ")", c.expected, actual);
    if (!r.certificate) continue;
    auto replayed = replay(*r.certificate);
    rows.add(std::string("replay(") + c.name + " certificate)", "verified", replayed.ok ? "verified" : replayed.message);
    auto round_trip = replay(Certificate::from_json(r.certificate->to_json()));
    rows.add(std::string("replay(") + c.name + " certificate, after JSON round trip)", "verified",
             round_trip.ok ? "verified" : round_trip.message);
    rows.add(std::string("certified claim vs is_spog(") + c.name + ")", actual, show(is_spog(a)));
  }
}

struct Timed {
  void (*run)(Rows&, const SuiteOptions&);
  double limit_seconds;
};

Timed criterion_body(int id) {
  switch (id) {
    case 1: return {example_42, 60};
    case 2: return {example_43, 600};
    case 3: return {example_44, 60};
    case 4: return {example_45, 300};
    case 5: return {example_46, 600};
    case 6: return {oracle_agreement, 600};
    case 7: return {properties, 0};
    case 8: return {certification, 600};
  }
  throw Error("unknown criterion " + std::to_string(id));
}

// Tally rows in a fixed order so that reports are comparable across runs.
const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "Saito criterion on free bases",
      "sum of exponents = |A|",
      "chi(A) = prod (t - d_i) for free A",
      "chi(A; 1) = 0",
      "chi(A) = chi(A') - chi(A^H)",
      "Euler restriction onto D(A^H) is surjective when A' is free",
      "exponent addition test agrees with freeness of A",
      "pd D(A) <= 1 when A' and A^H are free",
      "g(A) <= 2l - 2 when A' and A^H are free",
      "A free, A' not free => A' SPOG, POexp(A') = exp(A), level |A'| - |A^H|",
      "A' free, g(A) = l + 1 => A SPOG",
      "A' free, g(A) <= l + 2 => A^H free",
      "SPOG criterion: predicted exponents => SPOG data",
      "SPOG criterion: SPOG data => predicted exp(A^H)",
      "SPOG shape: l + 1 generators, one relation of degree level + 1",
      "SPOG generators built from a basis of D(A')",
  };
  return names;
}

std::vector<std::int64_t> poly_difference(const CharPoly& p, const CharPoly& q) {
  std::vector<std::int64_t> out(std::max(p.coeffs.size(), q.coeffs.size()), 0);
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) out[k] += p.coeffs[k];
  for (std::size_t k = 0; k < q.coeffs.size(); ++k) out[k] -= q.coeffs[k];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

bool CriterionResult::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

std::vector<CriterionInfo> suite_criteria() { return criteria(); }

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  auto body = criterion_body(id);
  CriterionResult out;
  out.info = criteria().at(static_cast<std::size_t>(id - 1));
  Rows rows;
  const auto start = Clock::now();
  body.run(rows, options);
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (body.limit_seconds > 0)
    rows.add("runtime", "<= " + seconds_string(body.limit_seconds), seconds_string(out.seconds),
             out.seconds <= body.limit_seconds);
  out.rows = rows.take();
  return out;
}

Arrangement suite_arrangement(const std::string& name, const SuiteOptions& options) {
  Arrangement a = corpus(name).arrangement;
  if (!options.perturb || name != "ex-4.2") return a;
  const Hyperplane original({1, -1, 2, -2});
  std::vector<RationalVector> forms;
  for (const auto& h : a.hyperplanes()) forms.push_back(h == original ? RationalVector{1, -1, 2, -3} : h.coeffs());
  return Arrangement::make(a.dim(), forms);
}

std::vector<Arrangement> random_arrangements(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> size(4, 7);
  std::vector<Arrangement> out;
  while (out.size() < count) {
    const int n = size(rng);
    std::set<Hyperplane> seen;
    std::vector<RationalVector> forms;
    while (static_cast<int>(forms.size()) < n) {
      RationalVector v{entry(rng), entry(rng), entry(rng)};
      if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
      if (seen.insert(Hyperplane(v)).second) forms.push_back(v);
    }
    if (rank(forms) < 3) continue;
    out.push_back(Arrangement::make(3, forms));
  }
  return out;
}

void check_properties(const Arrangement& a, const std::string& label, std::vector<PropertyTally>& tallies) {
  if (tallies.empty())
    for (const auto& name : property_names()) tallies.push_back({name, 0, 0, {}});
  auto tally = [&](std::size_t which, bool ok, const std::string& detail) {
    auto& t = tallies[which];
    ++t.instances;
    if (ok) return;
    if (t.violations++ == 0) t.first_violation = label + ": " + detail;
  };
  const int l = a.dim();
  const auto n = static_cast<std::int64_t>(a.size());

  const Presentation p = derivation_module(a);
  const CharPoly chi = characteristic_polynomial(a);
  if (n > 0) tally(3, chi.evaluate(1) == 0, "chi(1) = " + std::to_string(chi.evaluate(1)));

  std::optional<std::vector<int>> ea = p.exponents();
  if (ea) {
    bool saito = false;
    try {
      saito = saito_check(p.generators, a);
    } catch (const Error& e) {
      tally(0, false, e.what());
    }
    tally(0, saito, "determinant is not c * Q");
    std::int64_t sum = 0;
    for (int d : *ea) sum += d;
    tally(1, sum == n, "exponents " + format_exponents(*ea) + " sum to " + std::to_string(sum));
    tally(2, chi == CharPoly::from_roots({ea->begin(), ea->end()}),
          "chi = " + chi.to_string() + ", exp = " + format_exponents(*ea));
  }
  const auto spog = p.spog();
  if (spog) {
    const auto rel = p.relation_degrees();
    const bool shape = p.g() == static_cast<std::size_t>(l + 1) && rel.size() == 1 && rel[0] == spog->level + 1;
    tally(14, shape, "g = " + std::to_string(p.g()) + ", relations " + show_multiset(rel));
  }

  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string where = " at H = " + a[k].to_string();
    const Arrangement del = deletion(a, k);
    const Arrangement res = restrict_to(a, k).restricted;
    const Presentation pd = derivation_module(del);
    const Presentation pr = derivation_module(res, {Route::syzygy_system, false});
    const auto ed = pd.exponents();
    const auto er = pr.exponents();
    const auto nd = static_cast<std::int64_t>(del.size());
    const auto nr = static_cast<std::int64_t>(res.size());

    tally(4, chi.coeffs == poly_difference(characteristic_polynomial(del), characteristic_polynomial(res)),
          "recurrence fails" + where);
    if (ed) {
      bool ok = false;
      std::string detail = "rho not surjective" + where;
      try {
        ok = fst_check(a, k);
      } catch (const Error& e) {
        detail = e.what() + where;
      }
      tally(5, ok, detail);
    }
    if (ed && er) {
      auto v = addition_check(*ed, *er);
      const bool ok = (v.kind == AdditionVerdict::Kind::free) == ea.has_value() && (!ea || v.exponents == *ea);
      tally(6, ok, "exp(A') " + format_exponents(*ed) + ", exp(A^H) " + format_exponents(*er) + where);
      tally(7, p.relations_free(), "relations have syzygies" + where);
      tally(8, p.g() <= static_cast<std::size_t>(2 * l - 2), "g = " + std::to_string(p.g()) + where);
    }
    if (ea && !ed) {
      const auto s = pd.spog();
      const bool ok = s && s->poexp == *ea && s->level == nd - nr;
      tally(9, ok, "A' gives " + show(s) + where);
    }
    if (ed && p.g() == static_cast<std::size_t>(l + 1)) tally(10, spog.has_value(), "not SPOG" + where);
    if (ed && p.g() <= static_cast<std::size_t>(l + 2)) tally(11, er.has_value(), "A^H not free" + where);
    if (ed && er) {
      try {
        if (auto m = spog_match(*ed, *er, nd, nr)) {
          const bool ok = spog && spog->poexp == m->poexp && spog->level == m->level;
          tally(12, ok, "predicted " + show(m) + ", computed " + show(spog) + where);
        }
      } catch (const Error& e) {
        tally(12, false, e.what() + where);
      }
    }
    if (ed && spog) {
      for (const auto& pred : spog_predict(*ed, nd, nr)) {
        if (pred.poexp != spog->poexp || pred.level != spog->level) continue;
        tally(13, er && *er == pred.restriction_exponents,
              "predicted " + format_exponents(pred.restriction_exponents) + ", computed " + show(er) + where);
      }
      try {
        auto c = spog_generators_from_basis(a, k);
        if (c.applicable) {
          bool ok = c.poexp == spog->poexp && c.level == spog->level;
          for (const auto& d : c.spog_generators) ok = ok && membership(d, a);
          tally(15, ok, "construction gives " + Claim{Claim::Kind::spog, c.poexp, c.level}.to_string() + where);
        }
      } catch (const FalsificationError& e) {
        tally(15, false, e.what() + where);
      }
    }
  }
}

}  // namespace logder
