#include "logder/theorems.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "logder/derivmod.hpp"
#include "logder/error.hpp"
#include "logder/linalg.hpp"

namespace logder {

namespace {

struct BudgetExhausted {};

Exponents sorted(Exponents e) {
  std::sort(e.begin(), e.end());
  return e;
}

std::int64_t sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

bool splits_nonnegative(const std::optional<std::vector<std::int64_t>>& roots) {
  return roots && std::all_of(roots->begin(), roots->end(), [](std::int64_t r) { return r >= 0; });
}

Exponents to_exponents(const std::vector<std::int64_t>& roots) { return {roots.begin(), roots.end()}; }

std::vector<std::size_t> canonical_order(const Arrangement& a) {
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
  return order;
}

std::optional<Claim> base_claim(const Arrangement& a, std::string& rule) {
  const int l = a.dim();
  const int n = static_cast<int>(a.size());
  if (n == 0) {
    rule = "empty";
    return Claim{Claim::Kind::free, Exponents(l, 0), 0};
  }
  if (l <= 2) {
    rule = "base-dim<=2";
    return Claim{Claim::Kind::free, l == 1 ? Exponents{1} : sorted({1, n - 1}), 0};
  }
  RationalMatrix rows;
  for (const auto& h : a.hyperplanes()) rows.push_back(h.coeffs());
  if (static_cast<int>(rank(rows)) == n) {
    rule = "base-boolean";
    Exponents e(l, 0);
    std::fill(e.end() - n, e.end(), 1);
    return Claim{Claim::Kind::free, e, 0};
  }
  return std::nullopt;
}

}  // namespace

std::string format_exponents(const Exponents& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
  os << ')';
  return os.str();
}

AdditionVerdict addition_check(const Exponents& exp_deletion, const Exponents& exp_restriction) {
  if (exp_deletion.size() != exp_restriction.size() + 1)
    throw PreconditionError("exp(A') needs exactly one more entry than exp(A^H)");
  Exponents d = sorted(exp_deletion), r = sorted(exp_restriction);
  Exponents rest;
  std::set_difference(d.begin(), d.end(), r.begin(), r.end(), std::back_inserter(rest));
  AdditionVerdict v;
  if (rest.size() != 1) {
    v.kind = AdditionVerdict::Kind::restriction_not_matching;
    return v;
  }
  v.kind = AdditionVerdict::Kind::free;
  v.exponents = d;
  *std::find(v.exponents.rbegin(), v.exponents.rend(), rest[0]) += 1;
  std::sort(v.exponents.begin(), v.exponents.end());
  return v;
}

AdditionVerdict addition_check(const std::optional<Exponents>& exp_deletion,
                               const std::optional<Exponents>& exp_restriction) {
  if (!exp_deletion || !exp_restriction) return {};
  return addition_check(*exp_deletion, *exp_restriction);
}

std::vector<SpogPrediction> spog_predict(Exponents exp, std::int64_t n_deletion, std::int64_t n_restriction) {
  std::sort(exp.begin(), exp.end());
  const int l = static_cast<int>(exp.size());
  auto d_at = [&](int one_based) { return static_cast<std::int64_t>(exp[one_based - 1]); };
  std::vector<SpogPrediction> out;
  for (int i = 2; i <= l; ++i) {
    for (int j = i + 1; j <= l; ++j) {
      const std::int64_t d = d_at(i) + d_at(j) + n_restriction - n_deletion;
      const std::int64_t upper = j < l ? d_at(j + 1) : std::numeric_limits<std::int64_t>::max();
      if (!(d_at(j) < d && d <= upper)) continue;
      SpogPrediction p;
      p.i = i;
      p.j = j;
      p.level = static_cast<int>(d);
      for (int k = 1; k <= l; ++k) {
        if (k != i && k != j) p.restriction_exponents.push_back(exp[k - 1]);
        p.poexp.push_back(exp[k - 1] + (k == i || k == j ? 1 : 0));
      }
      p.restriction_exponents.push_back(p.level);
      std::sort(p.restriction_exponents.begin(), p.restriction_exponents.end());
      std::sort(p.poexp.begin(), p.poexp.end());
      bool seen = std::any_of(out.begin(), out.end(), [&](const SpogPrediction& q) {
        return q.level == p.level && q.restriction_exponents == p.restriction_exponents && q.poexp == p.poexp;
      });
      if (!seen) out.push_back(std::move(p));
    }
  }
  return out;
}

std::optional<SpogPrediction> spog_match(Exponents exp_deletion, Exponents exp_restriction, std::int64_t n_deletion,
                                         std::int64_t n_restriction) {
  if (sum(exp_deletion) != n_deletion)
    throw PreconditionError("exp(A') sums to " + std::to_string(sum(exp_deletion)) + ", not |A'| = " +
                            std::to_string(n_deletion));
  if (sum(exp_restriction) != n_restriction)
    throw PreconditionError("exp(A^H) sums to " + std::to_string(sum(exp_restriction)) + ", not |A^H| = " +
                            std::to_string(n_restriction));
  if (exp_deletion.size() != exp_restriction.size() + 1)
    throw PreconditionError("exp(A') needs exactly one more entry than exp(A^H)");
  std::sort(exp_restriction.begin(), exp_restriction.end());
  std::optional<SpogPrediction> found;
  for (auto& p : spog_predict(std::move(exp_deletion), n_deletion, n_restriction)) {
    if (p.restriction_exponents != exp_restriction) continue;
    if (found && (found->poexp != p.poexp || found->level != p.level))
      throw Error("two predictions match exp(A^H) " + format_exponents(exp_restriction) + " with different outcomes");
    if (!found) found = std::move(p);
  }
  return found;
}

std::optional<Exponents> division_exponents(const CharPoly& chi, const CharPoly& chi_restriction,
                                            const Exponents& exp_restriction) {
  auto q = charpoly_quotient(chi, chi_restriction);
  if (!q || q->degree() != 1 || q->coeffs[1] != 1) return std::nullopt;
  Exponents e = exp_restriction;
  e.push_back(static_cast<int>(-q->coeffs[0]));
  return sorted(std::move(e));
}

DivisionVerdict division_check(const Arrangement& a, std::size_t k) {
  RestrictionData r = restrict_to(a, k);
  auto e = is_free(r.restricted);
  if (!e) return {};
  auto exps = division_exponents(characteristic_polynomial(a), characteristic_polynomial(r.restricted), *e);
  if (!exps) return {};
  return {true, *exps};
}

bool terao_factorization_check(const Arrangement& a) {
  auto e = is_free(a);
  if (!e) throw PreconditionError("the factorization applies to free arrangements");
  std::vector<std::int64_t> roots(e->begin(), e->end());
  return characteristic_polynomial(a) == CharPoly::from_roots(roots);
}

std::string Claim::to_string() const {
  if (kind == Kind::free) return "free " + format_exponents(exponents);
  return "spog POexp " + format_exponents(exponents) + " level " + std::to_string(level);
}

const CharPoly& StairSearch::chi(const Arrangement& a, const std::string& key) {
  auto it = chi_.find(key);
  if (it == chi_.end()) it = chi_.emplace(key, characteristic_polynomial(a)).first;
  return it->second;
}

const StairSearch::Entry& StairSearch::solve(const Arrangement& a) {
  const std::string key = canonical_form(a);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Entry e;
  e.arrangement = a;
  std::string rule;
  if (auto c = base_claim(a, rule)) {
    e.found = true;
    e.exponents = c->exponents;
    e.rule = rule;
    return memo_.emplace(key, std::move(e)).first->second;
  }
  if (++expansions_ > budget_) throw BudgetExhausted{};

  // A free arrangement has chi = prod (t - d_i) with d_i >= 0.
  const CharPoly chi_a = chi(a, key);
  auto roots = chi_a.integer_roots();
  if (!splits_nonnegative(roots)) return memo_.emplace(key, std::move(e)).first->second;
  const Exponents target = to_exponents(*roots);
  const auto order = canonical_order(a);

  for (std::size_t k : order) {
    Arrangement res = restrict_to(a, k).restricted;
    const std::string rkey = canonical_form(res);
    if (!charpoly_divides(chi(res, rkey), chi_a)) continue;
    const Entry& sub = solve(res);
    if (!sub.found) continue;
    auto exps = division_exponents(chi_a, chi(res, rkey), sub.exponents);
    if (!exps) continue;
    e.found = true;
    e.exponents = *exps;
    e.rule = "division";
    e.children = {rkey};
    e.witness = a[k].coeffs();
    return memo_.emplace(key, std::move(e)).first->second;
  }

  for (std::size_t k : order) {
    Arrangement del = deletion(a, k);
    Arrangement res = restrict_to(a, k).restricted;
    const std::string dkey = canonical_form(del), rkey = canonical_form(res);
    auto droots = chi(del, dkey).integer_roots();
    auto rroots = chi(res, rkey).integer_roots();
    if (!splits_nonnegative(droots) || !splits_nonnegative(rroots)) continue;
    auto predicted = addition_check(to_exponents(*droots), to_exponents(*rroots));
    if (predicted.kind != AdditionVerdict::Kind::free || predicted.exponents != target) continue;
    const Entry& sd = solve(del);
    if (!sd.found) continue;
    const Exponents dexp = sd.exponents;
    const Entry& sr = solve(res);
    if (!sr.found) continue;
    auto v = addition_check(dexp, sr.exponents);
    if (v.kind != AdditionVerdict::Kind::free) continue;
    e.found = true;
    e.exponents = v.exponents;
    e.rule = "addition";
    e.children = {dkey, rkey};
    e.witness = a[k].coeffs();
    return memo_.emplace(key, std::move(e)).first->second;
  }
  return memo_.emplace(key, std::move(e)).first->second;
}

std::size_t StairSearch::emit(const std::string& key, Certificate& c, std::map<std::string, std::size_t>& placed) const {
  if (auto it = placed.find(key); it != placed.end()) return it->second;
  const Entry& e = memo_.at(key);
  CertificateNode node;
  for (const auto& child : e.children) node.children.push_back(emit(child, c, placed));
  node.key = key;
  node.arrangement = e.arrangement;
  node.claim = Claim{Claim::Kind::free, e.exponents, 0};
  node.rule = e.rule;
  node.witness = e.witness;
  c.nodes.push_back(std::move(node));
  placed[key] = c.nodes.size() - 1;
  return c.nodes.size() - 1;
}

SearchResult StairSearch::stair_free(const Arrangement& a) {
  expansions_ = 0;
  SearchResult out;
  try {
    const Entry& e = solve(a);
    out.expansions = expansions_;
    if (!e.found) return out;
    Certificate c;
    std::map<std::string, std::size_t> placed;
    c.root = emit(canonical_form(a), c, placed);
    out.status = SearchResult::Status::found;
    out.certificate = std::move(c);
  } catch (const BudgetExhausted&) {
    out.status = SearchResult::Status::budget_exhausted;
    out.expansions = expansions_;
  }
  return out;
}

SearchResult StairSearch::stair_spog(const Arrangement& a) {
  expansions_ = 0;
  SearchResult out;
  try {
    for (std::size_t k : canonical_order(a)) {
      Arrangement del = deletion(a, k);
      Arrangement res = restrict_to(a, k).restricted;
      const Entry& sd = solve(del);
      if (!sd.found) continue;
      const Exponents dexp = sd.exponents;
      const Entry& sr = solve(res);
      if (!sr.found) continue;
      auto m = spog_match(dexp, sr.exponents, static_cast<std::int64_t>(del.size()),
                          static_cast<std::int64_t>(res.size()));
      if (!m) continue;
      Certificate c;
      std::map<std::string, std::size_t> placed;
      CertificateNode root;
      root.children = {emit(canonical_form(del), c, placed), emit(canonical_form(res), c, placed)};
      root.key = canonical_form(a);
      root.arrangement = a;
      root.claim = Claim{Claim::Kind::spog, m->poexp, m->level};
      root.rule = "spog-criterion";
      root.witness = a[k].coeffs();
      c.nodes.push_back(std::move(root));
      c.root = c.nodes.size() - 1;
      out.status = SearchResult::Status::found;
      out.certificate = std::move(c);
      break;
    }
  } catch (const BudgetExhausted&) {
    out.status = SearchResult::Status::budget_exhausted;
  }
  out.expansions = expansions_;
  return out;
}

SearchResult stair_free_certify(const Arrangement& a, std::size_t budget) { return StairSearch(budget).stair_free(a); }

SearchResult stair_spog_certify(const Arrangement& a, std::size_t budget) { return StairSearch(budget).stair_spog(a); }

std::vector<ArgumentStep> b4_deletion_freeness_argument() {
  std::vector<ArgumentStep> steps;
  auto add = [&](std::string claim, std::string expected, std::string actual) {
    bool pass = expected == actual;
    steps.push_back({std::move(claim), std::move(expected), std::move(actual), pass});
  };
  auto show = [](const std::optional<Exponents>& e) { return e ? format_exponents(*e) : std::string("not free"); };

  auto entry = corpus("ex-4.3");
  const Arrangement& b = entry.arrangement;
  const std::size_t l_index = *entry.distinguished;
  const Arrangement a_del = deletion(b, l_index);
  const Arrangement b_res = restrict_to(b, l_index).restricted;

  auto exp_del = is_free(a_del);
  add("A' = B4 minus x1 is free", "(1,3,5,6)", show(exp_del));
  auto exp_res = is_free(b_res);
  add("B^L is free, B = A' + {L: x1 + x2 + x3}", "(1,5,7)", show(exp_res));

  StairSearch search;
  auto sd = search.stair_free(a_del);
  add("A' has a division/addition certificate", "found",
      sd.status == SearchResult::Status::found ? "found" : "not found");
  auto sr = search.stair_free(b_res);
  add("B^L has a division/addition certificate", "found",
      sr.status == SearchResult::Status::found ? "found" : "not found");

  std::string predicted = "not applicable";
  if (exp_del && exp_res) {
    if (auto m = spog_match(*exp_del, *exp_res, static_cast<std::int64_t>(a_del.size()),
                            static_cast<std::int64_t>(b_res.size())))
      predicted = Claim{Claim::Kind::spog, m->poexp, m->level}.to_string();
  }
  add("exponent criterion on (A', B^L) predicts B SPOG", "spog POexp (1,4,5,7) level 7", predicted);
  auto s = is_spog(b);
  add("B is SPOG", "spog POexp (1,4,5,7) level 7",
      s ? Claim{Claim::Kind::spog, s->poexp, s->level}.to_string() : std::string("not SPOG"));

  const Arrangement c = addition(b, Hyperplane({1, 0, 0, 0}));
  const std::size_t h_index = *c.index_of(Hyperplane({1, 0, 0, 0}));
  const auto c_res = restrict_to(c, h_index).restricted;
  add("|C^H| for C = B + {H: x1}", "9", std::to_string(c_res.size()));
  add("|B| - |C^H|", "7", std::to_string(static_cast<long>(b.size()) - static_cast<long>(c_res.size())));
  add("C is free", "(1,4,5,7)", show(is_free(c)));
  return steps;
}

}  // namespace logder
