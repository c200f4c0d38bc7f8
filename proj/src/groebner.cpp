#include "logder/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "logder/error.hpp"

namespace logder {

namespace {

using Term = ModuleVector::Term;

// cur[start..] - c * m * g[1..]; the leading terms are known to cancel.
std::vector<Term> subtract_multiple(const std::vector<Term>& cur, std::size_t start, const Monomial& m,
                                    const Rational& c, const std::vector<Term>& g) {
  std::vector<Term> out;
  out.reserve(cur.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  Rational prod;
  while (i < cur.size() || j < g.size()) {
    int cmp;
    Monomial gm;
    if (j < g.size()) gm = g[j].monomial * m;
    if (i == cur.size()) cmp = 1;
    else if (j == g.size()) cmp = -1;
    else cmp = compare_terms(cur[i].position, cur[i].monomial, g[j].position, gm);
    if (cmp < 0) {
      out.push_back(cur[i++]);
    } else if (cmp > 0) {
      prod = g[j].coeff * c;
      out.push_back({g[j].position, gm, Rational(-prod)});
      ++j;
    } else {
      prod = g[j].coeff * c;
      Rational s = cur[i].coeff - prod;
      if (s != 0) out.push_back({cur[i].position, cur[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction. find(position, monomial) returns the reducer or nullptr.
template <class Find>
std::vector<Term> reduce_terms(std::vector<Term> cur, Find&& find) {
  std::vector<Term> rem;
  std::size_t start = 0;
  while (start < cur.size()) {
    const Term& t = cur[start];
    const ModuleVector* g = find(t.position, t.monomial);
    if (g == nullptr) {
      rem.push_back(std::move(cur[start]));
      ++start;
      continue;
    }
    const Term& lt = g->terms().front();
    Monomial m = t.monomial.quotient(lt.monomial);
    Rational c = t.coeff;
    if (lt.coeff != 1) c /= lt.coeff;
    cur = subtract_multiple(cur, start, m, c, g->terms());
    start = 0;
  }
  return rem;
}

void require_homogeneous(std::span<const ModuleVector> gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw NotHomogeneous("non-homogeneous generator: " + g.to_string());
}

std::vector<int> resolve_degrees(std::span<const ModuleVector> gens, std::span<const int> degrees) {
  if (!degrees.empty()) {
    if (degrees.size() != gens.size()) throw ArityMismatch("one degree per generator expected");
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!gens[k].is_zero() && gens[k].degree() != degrees[k])
        throw NotHomogeneous("declared generator degree disagrees with its terms");
    return {degrees.begin(), degrees.end()};
  }
  std::vector<int> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw NotHomogeneous("zero generator needs an explicit degree");
    out.push_back(g.degree());
  }
  return out;
}

// (gens_k, e_k) in the free module  F + S^m  with the F-block most significant.
GroebnerBuilder lifted_builder(std::span<const ModuleVector> gens, const std::vector<int>& degs) {
  const int r = gens[0].rank();
  const int nvars = gens[0].num_vars();
  std::vector<int> shifts = gens[0].shifts();
  shifts.insert(shifts.end(), degs.begin(), degs.end());
  GroebnerBuilder builder(nvars, shifts);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].num_vars() != nvars || gens[k].shifts() != gens[0].shifts())
      throw ArityMismatch("generators live in different free modules");
    std::vector<Term> terms = gens[k].terms();
    terms.push_back({r + static_cast<int>(k), Monomial{}, Rational(1)});
    builder.insert(ModuleVector::from_terms(nvars, shifts, std::move(terms)));
  }
  builder.complete();
  return builder;
}

std::vector<ModuleVector> to_vectors(std::span<const Polynomial> polys) {
  std::vector<ModuleVector> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(as_vector(p));
  return out;
}

}  // namespace

bool ModuleOrder::is_identity() const {
  for (std::size_t k = 0; k < priority.size(); ++k)
    if (priority[k] != static_cast<int>(k)) return false;
  return true;
}

ModuleVector as_vector(const Polynomial& p, int shift) {
  Polynomial comps[] = {p};
  return ModuleVector::from_components(comps, {shift});
}

GroebnerBuilder::GroebnerBuilder(int nvars, std::vector<int> shifts)
    : nvars_(nvars), shifts_(std::move(shifts)), leads_(shifts_.size()) {}

void GroebnerBuilder::check_shape(const ModuleVector& v) const {
  if (v.num_vars() != nvars_ || v.shifts() != shifts_)
    throw ArityMismatch("vector does not live in the builder's free module");
  if (!v.is_homogeneous()) throw NotHomogeneous("non-homogeneous vector: " + v.to_string());
}

int GroebnerBuilder::find_divisor(int position, const Monomial& m) const {
  for (const auto& [lead, idx] : leads_[position])
    if (lead.divides(m)) return idx;
  return -1;
}

ModuleVector GroebnerBuilder::reduce(const ModuleVector& v) const {
  if (v.num_vars() != nvars_ || v.shifts() != shifts_)
    throw ArityMismatch("vector does not live in the builder's free module");
  auto rem = reduce_terms(v.terms(), [this](int pos, const Monomial& m) -> const ModuleVector* {
    int idx = find_divisor(pos, m);
    return idx < 0 ? nullptr : &elements_[idx];
  });
  ModuleVector out(nvars_, shifts_);
  out.terms_ = std::move(rem);
  return out;
}

bool GroebnerBuilder::insert(const ModuleVector& v) {
  check_shape(v);
  ModuleVector r = reduce(v);
  if (r.is_zero()) return false;
  add_element(r.monic());
  return true;
}

void GroebnerBuilder::add_element(ModuleVector h) {
  const int hi = static_cast<int>(elements_.size());
  const int pos = h.leading_term().position;
  const Monomial hm = h.leading_term().monomial;
  const bool rank_one = shifts_.size() == 1;

  struct Candidate {
    int g;
    Monomial lcm;
    bool disjoint;
  };
  std::vector<Candidate> fresh;
  for (const auto& [lead, idx] : leads_[pos]) fresh.push_back({idx, lcm(hm, lead), rank_one && coprime(hm, lead)});

  std::vector<Candidate> kept;
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const Candidate& c = fresh[i];
    bool keep = c.disjoint;
    if (!keep) {
      keep = true;
      for (std::size_t j = i + 1; j < fresh.size() && keep; ++j)
        if (fresh[j].lcm.divides(c.lcm)) keep = false;
      for (std::size_t j = 0; j < kept.size() && keep; ++j)
        if (kept[j].lcm.divides(c.lcm)) keep = false;
    }
    if (keep) kept.push_back(c);
  }

  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.position != pos || !hm.divides(p.lcm)) return false;
    Monomial li = lcm(elements_[p.i].leading_term().monomial, hm);
    Monomial lj = lcm(elements_[p.j].leading_term().monomial, hm);
    return li != p.lcm && lj != p.lcm;
  });
  for (const auto& c : kept)
    if (!c.disjoint) pairs_.push_back({c.g, hi, c.lcm.degree() + shifts_[pos], pos, c.lcm});

  auto& leads = leads_[pos];
  std::erase_if(leads, [&](const std::pair<Monomial, int>& e) {
    if (!hm.divides(e.first)) return false;
    active_[e.second] = false;
    return true;
  });
  leads.emplace_back(hm, hi);
  elements_.push_back(std::move(h));
  active_.push_back(true);
}

ModuleVector GroebnerBuilder::s_vector(const Pair& p) const {
  const auto& a = elements_[p.i];
  const auto& b = elements_[p.j];
  ModuleVector sa = a.times_term(p.lcm.quotient(a.leading_term().monomial), Rational(1));
  ModuleVector sb = b.times_term(p.lcm.quotient(b.leading_term().monomial), Rational(1));
  return sa - sb;
}

void GroebnerBuilder::complete_through(int degree) {
  while (!pairs_.empty()) {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      if (p.degree > degree) continue;
      if (best == pairs_.size()) {
        best = k;
        continue;
      }
      const Pair& q = pairs_[best];
      if (p.degree != q.degree) {
        if (p.degree < q.degree) best = k;
        continue;
      }
      int c = compare_terms(p.position, p.lcm, q.position, q.lcm);
      if (c > 0 || (c == 0 && std::tie(p.i, p.j) < std::tie(q.i, q.j))) best = k;
    }
    if (best == pairs_.size()) return;
    Pair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    ModuleVector r = reduce(s_vector(p));
    if (!r.is_zero()) add_element(r.monic());
  }
}

void GroebnerBuilder::complete() { complete_through(std::numeric_limits<int>::max()); }

std::vector<ModuleVector> GroebnerBuilder::reduced_basis() const {
  std::vector<ModuleVector> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (!active_[k]) continue;
    const auto& g = elements_[k];
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    ModuleVector t(nvars_, shifts_);
    t.terms_ = std::move(tail);
    ModuleVector r = reduce(t);
    ModuleVector v(nvars_, shifts_);
    v.terms_.push_back(g.terms().front());
    v.terms_.insert(v.terms_.end(), r.terms_.begin(), r.terms_.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const ModuleVector& a, const ModuleVector& b) {
    const auto& x = a.leading_term();
    const auto& y = b.leading_term();
    return compare_terms(x.position, x.monomial, y.position, y.monomial) < 0;
  });
  return out;
}

std::vector<ModuleVector> groebner_basis(std::span<const ModuleVector> gens, const ModuleOrder& order) {
  if (gens.empty()) return {};
  require_homogeneous(gens);
  const int r = gens[0].rank();
  const bool identity = order.priority.empty() || order.is_identity();
  if (!identity && static_cast<int>(order.priority.size()) != r)
    throw ArityMismatch("module order priority has wrong length");

  std::vector<int> perm(r), inv(r), shifts(r);
  std::iota(perm.begin(), perm.end(), 0);
  if (!identity) perm = order.priority;
  for (int k = 0; k < r; ++k) {
    inv[perm[k]] = k;
    shifts[perm[k]] = gens[0].shifts()[k];
  }
  GroebnerBuilder builder(gens[0].num_vars(), shifts);
  for (const auto& g : gens) builder.insert(identity ? g : g.permuted(perm, shifts));
  builder.complete();
  auto basis = builder.reduced_basis();
  if (identity) return basis;
  for (auto& b : basis) b = b.permuted(inv, gens[0].shifts());
  return basis;
}

ModuleVector reduce_by_list(const ModuleVector& v, std::span<const ModuleVector> basis) {
  for (const auto& b : basis)
    if (b.num_vars() != v.num_vars() || b.shifts() != v.shifts())
      throw ArityMismatch("basis and vector live in different free modules");
  auto rem = reduce_terms(v.terms(), [&](int pos, const Monomial& m) -> const ModuleVector* {
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      const auto& lt = b.leading_term();
      if (lt.position == pos && lt.monomial.divides(m)) return &b;
    }
    return nullptr;
  });
  ModuleVector out(v.num_vars(), v.shifts());
  out.terms_ = std::move(rem);
  return out;
}

ModuleVector normal_form(const ModuleVector& v, std::span<const ModuleVector> gb, const ModuleOrder& order) {
  if (order.priority.empty() || order.is_identity()) return reduce_by_list(v, gb);
  const int r = v.rank();
  std::vector<int> inv(r), shifts(r);
  for (int k = 0; k < r; ++k) {
    inv[order.priority[k]] = k;
    shifts[order.priority[k]] = v.shifts()[k];
  }
  std::vector<ModuleVector> pgb;
  for (const auto& g : gb) pgb.push_back(g.permuted(order.priority, shifts));
  return reduce_by_list(v.permuted(order.priority, shifts), pgb).permuted(inv, v.shifts());
}

std::vector<ModuleVector> syzygies(std::span<const ModuleVector> gens, std::span<const int> degrees) {
  if (gens.empty()) return {};
  require_homogeneous(gens);
  auto degs = resolve_degrees(gens, degrees);
  const int r = gens[0].rank();
  const int m = static_cast<int>(gens.size());
  auto builder = lifted_builder(gens, degs);
  std::vector<ModuleVector> out;
  for (auto& g : builder.reduced_basis())
    if (g.leading_term().position >= r) out.push_back(g.slice(r, m));
  return out;
}

std::vector<ModuleVector> syzygies(std::span<const Polynomial> gens, std::span<const int> degrees) {
  auto vecs = to_vectors(gens);
  return syzygies(std::span<const ModuleVector>(vecs), degrees);
}

std::vector<std::size_t> minimalize_indices(std::span<const ModuleVector> gens) {
  if (gens.empty()) return {};
  require_homogeneous(gens);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].is_zero()) order.push_back(k);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree() < gens[b].degree(); });
  GroebnerBuilder builder(gens[0].num_vars(), gens[0].shifts());
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    builder.complete_through(gens[idx].degree());
    if (builder.insert(gens[idx])) kept.push_back(idx);
  }
  return kept;
}

std::vector<ModuleVector> minimalize(std::span<const ModuleVector> gens) {
  std::vector<ModuleVector> out;
  for (std::size_t idx : minimalize_indices(gens)) out.push_back(gens[idx]);
  return out;
}

std::optional<std::vector<Polynomial>> express(const ModuleVector& target, std::span<const ModuleVector> gens,
                                               std::span<const int> degrees) {
  const int r = target.rank();
  if (gens.empty()) {
    if (target.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  require_homogeneous(gens);
  auto degs = resolve_degrees(gens, degrees);
  auto builder = lifted_builder(gens, degs);
  std::vector<int> shifts = target.shifts();
  shifts.insert(shifts.end(), degs.begin(), degs.end());
  ModuleVector t = ModuleVector::from_terms(target.num_vars(), shifts, target.terms());
  ModuleVector rem = builder.reduce(t);
  if (!rem.is_zero() && rem.leading_term().position < r) return std::nullopt;
  auto coeffs = rem.slice(r, static_cast<int>(gens.size())).components();
  for (auto& c : coeffs) c = -c;
  return coeffs;
}

std::optional<std::vector<Polynomial>> express(const Polynomial& target, std::span<const Polynomial> gens,
                                               std::span<const int> degrees) {
  auto vecs = to_vectors(gens);
  return express(as_vector(target), std::span<const ModuleVector>(vecs), degrees);
}

Polynomial gcd_pair(const Polynomial& f, const Polynomial& g) {
  if (f.num_vars() != g.num_vars()) throw ArityMismatch("gcd of polynomials in different rings");
  if (f.is_zero() && g.is_zero()) throw DivisionByZero("gcd of two zero polynomials");
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.num_vars(), 1);
  Polynomial pair[] = {f, g};
  auto syz = syzygies(std::span<const Polynomial>(pair));
  auto gens = minimalize(syz);
  if (gens.size() != 1) throw Error("syzygy module of two polynomials is not cyclic");
  // gens[0] = (a, b) with a f + b g = 0, so a f generates (f) ∩ (g).
  Polynomial lcm_fg = gens[0].component(0) * f;
  auto q = exact_divide(f * g, lcm_fg);
  if (!q) throw Error("lcm does not divide f*g");
  return q->primitive();
}

}  // namespace logder
