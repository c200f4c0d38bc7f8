#include "logder/derivmod.hpp"

#include <algorithm>
#include <sstream>

#include "logder/error.hpp"
#include "logder/groebner.hpp"

namespace logder {

namespace {

std::vector<ModuleVector> to_vectors(std::span<const Derivation> ds) {
  std::vector<ModuleVector> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.push_back(d.to_vector());
  return out;
}

std::vector<Derivation> to_derivations(std::span<const ModuleVector> vs) {
  std::vector<Derivation> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(Derivation::from_vector(v));
  return out;
}

std::vector<int> degrees_of(std::span<const Derivation> ds) {
  std::vector<int> out;
  for (const auto& d : ds) out.push_back(d.degree());
  return out;
}

void sort_by_degree(std::vector<ModuleVector>& vs) {
  std::stable_sort(vs.begin(), vs.end(), [](const ModuleVector& a, const ModuleVector& b) {
    return a.degree() < b.degree();
  });
}

std::vector<ModuleVector> iterated_generators(const Arrangement& a) {
  const int l = a.dim();
  std::vector<ModuleVector> gens;
  for (int i = 0; i < l; ++i) gens.push_back(ModuleVector::unit(l, std::vector<int>(l, 0), i));
  for (std::size_t k = 0; k < a.size(); ++k) {
    RestrictionData r = restrict_to(a, k);
    const Polynomial alpha = a[k].form();
    std::vector<Polynomial> values;
    std::vector<int> degs;
    bool all_zero = true;
    for (const auto& g : gens) {
      values.push_back(r.restrict_polynomial(Derivation::from_vector(g).apply_form(a[k].coeffs())));
      degs.push_back(g.degree());
      all_zero = all_zero && values.back().is_zero();
    }
    if (all_zero) continue;
    // sum c_k theta_k lies in D(B + H) iff the restricted c solve sum c_k v_k = 0 on H.
    std::vector<ModuleVector> next;
    for (const auto& s : syzygies(std::span<const Polynomial>(values), degs)) {
      std::vector<Polynomial> lifted;
      for (const auto& c : s.components()) lifted.push_back(r.lift_polynomial(c));
      ModuleVector v = combine(lifted, gens);
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    for (const auto& g : gens) next.push_back(g.times(alpha));
    gens = minimalize(next);
  }
  return gens;
}

std::vector<ModuleVector> system_generators(const Arrangement& a) {
  const int l = a.dim();
  const int n = static_cast<int>(a.size());
  std::vector<int> zero_shifts(n, 0);
  std::vector<ModuleVector> cols;
  std::vector<int> degs;
  for (int i = 0; i < l; ++i) {
    std::vector<Polynomial> comps;
    for (int h = 0; h < n; ++h) comps.push_back(Polynomial::constant(l, a[h][i]));
    cols.push_back(ModuleVector::from_components(comps, zero_shifts));
    degs.push_back(0);
  }
  for (int h = 0; h < n; ++h) {
    std::vector<Polynomial> comps(n, Polynomial(l));
    comps[h] = -a[h].form();
    cols.push_back(ModuleVector::from_components(comps, zero_shifts));
    degs.push_back(1);
  }
  std::vector<ModuleVector> projected;
  for (const auto& s : syzygies(std::span<const ModuleVector>(cols), degs)) {
    ModuleVector v = s.slice(0, l);
    if (!v.is_zero()) projected.push_back(std::move(v));
  }
  return minimalize(projected);
}

// Fraction-free elimination; every division is exact.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  Polynomial prev = Polynomial::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(nvars);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        if (!q) throw Error("inexact division in fraction-free determinant");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(nvars);
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

std::string degree_list(const std::vector<int>& ds) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < ds.size(); ++k) os << (k ? "," : "") << ds[k];
  os << ')';
  return os.str();
}

}  // namespace

Derivation::Derivation(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.num_vars() != dim()) throw ArityMismatch("derivation needs one coefficient per variable");
}

Derivation Derivation::zero(int dim) { return Derivation(std::vector<Polynomial>(dim, Polynomial(dim))); }

Derivation Derivation::euler(int dim) {
  std::vector<Polynomial> c;
  for (int i = 0; i < dim; ++i) c.push_back(Polynomial::variable(dim, i));
  return Derivation(std::move(c));
}

Derivation Derivation::partial(int dim, int i) {
  std::vector<Polynomial> c(dim, Polynomial(dim));
  c.at(i) = Polynomial::constant(dim, 1);
  return Derivation(std::move(c));
}

Derivation Derivation::from_vector(const ModuleVector& v) {
  if (v.rank() != v.num_vars() && !(v.rank() == 0 && v.num_vars() == 0))
    throw ArityMismatch("derivation vectors have rank equal to the variable count");
  std::vector<Polynomial> c = v.components();
  for (auto& p : c)
    if (p.num_vars() != v.num_vars()) p = Polynomial(v.num_vars());
  return Derivation(std::move(c));
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int Derivation::degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

bool Derivation::is_homogeneous() const {
  const int d = degree();
  for (const auto& c : coeffs_)
    if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != d)) return false;
  return true;
}

Polynomial Derivation::apply(const Polynomial& p) const {
  if (p.num_vars() != dim()) throw ArityMismatch("derivation and polynomial live on different spaces");
  Polynomial out(dim());
  for (int i = 0; i < dim(); ++i)
    if (!coeffs_[i].is_zero()) out += coeffs_[i] * p.derivative(i);
  return out;
}

Polynomial Derivation::apply_form(const RationalVector& alpha) const {
  if (static_cast<int>(alpha.size()) != dim()) throw ArityMismatch("form and derivation differ in dimension");
  Polynomial out(dim());
  for (int i = 0; i < dim(); ++i)
    if (alpha[i] != 0) out += alpha[i] * coeffs_[i];
  return out;
}

Derivation Derivation::times(const Polynomial& p) const {
  std::vector<Polynomial> c;
  for (const auto& f : coeffs_) c.push_back(f * p);
  return Derivation(std::move(c));
}

Derivation& Derivation::operator+=(const Derivation& other) {
  if (other.dim() != dim()) throw ArityMismatch("derivations on different spaces");
  for (int i = 0; i < dim(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
  if (other.dim() != dim()) throw ArityMismatch("derivations on different spaces");
  for (int i = 0; i < dim(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ModuleVector Derivation::to_vector() const {
  return ModuleVector::from_components(coeffs_, std::vector<int>(coeffs_.size(), 0));
}

std::string Derivation::to_string() const {
  std::string s;
  for (int i = 0; i < dim(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")*D" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::vector<int> Presentation::generator_degrees() const { return degrees_of(generators); }

std::vector<int> Presentation::relation_degrees() const {
  std::vector<int> out;
  for (const auto& r : relations) out.push_back(r.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> Presentation::exponents() const {
  if (!is_free()) return std::nullopt;
  return generator_degrees();
}

std::optional<SpogData> Presentation::spog() const {
  if (!relations_computed) throw PreconditionError("SPOG detection needs the relations");
  if (generators.size() != static_cast<std::size_t>(dim) + 1 || relations.size() != 1) return std::nullopt;
  const int level = relations[0].degree() - 1;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].degree() != level || relations[0].component(static_cast<int>(k)).is_zero()) continue;
    SpogData s;
    s.level = level;
    s.level_generator = k;
    for (std::size_t m = 0; m < generators.size(); ++m)
      if (m != k) s.poexp.push_back(generators[m].degree());
    return s;
  }
  return std::nullopt;
}

std::vector<std::int64_t> Presentation::hilbert_values(int max_degree) const {
  if (!relations_computed) throw PreconditionError("the Hilbert function needs the relations");
  const auto degs = generator_degrees();
  std::vector<std::int64_t> out;
  if (relations.empty()) {
    for (int d = 0; d <= max_degree; ++d) out.push_back(free_hilbert(dim, degs, d));
    return out;
  }
  // Standard monomials of the relation module span the quotient.
  auto gb = groebner_basis(relations);
  std::vector<std::vector<Monomial>> leads(generators.size());
  for (const auto& g : gb) leads[g.leading_term().position].push_back(g.leading_term().monomial);
  for (int d = 0; d <= max_degree; ++d) {
    std::int64_t count = 0;
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (d < degs[k]) continue;
      for (const auto& m : monomials_of_degree(dim, d - degs[k])) {
        bool standard = std::none_of(leads[k].begin(), leads[k].end(), [&](const Monomial& lt) { return lt.divides(m); });
        if (standard) ++count;
      }
    }
    out.push_back(count);
  }
  return out;
}

std::int64_t Presentation::hilbert_function(int d) const {
  if (d < 0) return 0;
  return hilbert_values(d).back();
}

bool Presentation::relations_free() const {
  if (!relations_computed) throw PreconditionError("pd check needs the relations");
  if (relations.size() <= 1) return true;
  return minimalize(syzygies(std::span<const ModuleVector>(relations))).empty();
}

std::int64_t free_hilbert(int vars, std::span<const int> shifts, int d) {
  std::int64_t total = 0;
  for (int s : shifts)
    if (d >= s) total += count_monomials(vars, d - s);
  return total;
}

Presentation derivation_module(const Arrangement& a, const ModuleOptions& options) {
  Presentation p;
  p.dim = a.dim();
  p.num_hyperplanes = a.size();
  std::vector<ModuleVector> gens;
  if (a.empty()) {
    for (int i = 0; i < a.dim(); ++i) gens.push_back(ModuleVector::unit(a.dim(), std::vector<int>(a.dim(), 0), i));
  } else {
    gens = options.route == Route::iterated ? iterated_generators(a) : system_generators(a);
  }
  for (auto& g : gens) g = g.monic();
  sort_by_degree(gens);
  p.generators = to_derivations(gens);
  if (options.relations) {
    if (gens.size() > static_cast<std::size_t>(a.dim())) {
      auto degs = p.generator_degrees();
      p.relations = minimalize(syzygies(std::span<const ModuleVector>(gens), degs));
      for (auto& r : p.relations) r = r.monic();
    }
    p.relations_computed = true;
  }
  return p;
}

std::optional<std::vector<int>> is_free(const Presentation& p, const Arrangement& a) {
  if (!p.is_free()) return std::nullopt;
  if (!saito_check(p.generators, a)) throw Error("computed basis fails the Saito determinant test");
  return p.generator_degrees();
}

std::optional<std::vector<int>> is_free(const Arrangement& a) {
  return is_free(derivation_module(a, {Route::syzygy_system, false}), a);
}

std::optional<SpogData> is_spog(const Arrangement& a) { return derivation_module(a).spog(); }

std::size_t g_of(const Arrangement& a) { return derivation_module(a, {Route::syzygy_system, false}).g(); }

BettiData betti(const Presentation& p) {
  if (!p.relations_computed) throw PreconditionError("Betti data needs the relations");
  BettiData out;
  out.d = {p.generator_degrees(), p.relation_degrees()};
  auto it = std::find(out.d.generators.begin(), out.d.generators.end(), 1);
  if (it != out.d.generators.end()) {
    Betti d0 = out.d;
    d0.generators.erase(d0.generators.begin() + (it - out.d.generators.begin()));
    out.d0 = std::move(d0);
  }
  return out;
}

BettiData betti(const Arrangement& a) { return betti(derivation_module(a)); }

bool membership(const Derivation& theta, const Arrangement& a) {
  if (theta.dim() != a.dim()) throw ArityMismatch("derivation and arrangement differ in dimension");
  for (const auto& h : a.hyperplanes())
    if (!exact_divide(theta.apply_form(h.coeffs()), h.form())) return false;
  return true;
}

bool saito_check(std::span<const Derivation> derivs, const Arrangement& a) {
  const int l = a.dim();
  if (derivs.size() != static_cast<std::size_t>(l))
    throw PreconditionError("Saito's criterion needs exactly " + std::to_string(l) + " derivations");
  for (std::size_t k = 0; k < derivs.size(); ++k)
    if (!membership(derivs[k], a)) throw PreconditionError("derivation " + std::to_string(k) + " is not in D(A)");
  std::vector<std::vector<Polynomial>> m;
  for (const auto& d : derivs) m.push_back(d.coeffs());
  Polynomial det = bareiss_determinant(std::move(m), l);
  if (det.is_zero()) return false;
  auto q = exact_divide(det, a.defining_polynomial());
  return q && q->is_constant() && !q->is_zero();
}

std::size_t nt_count(std::span<const Derivation> basis, const Arrangement& a, std::size_t k) {
  if (!saito_check(basis, deletion(a, k))) throw PreconditionError("not a basis of D(A')");
  return static_cast<std::size_t>(
      std::count_if(basis.begin(), basis.end(), [&](const Derivation& d) { return !membership(d, a); }));
}

AdaptedBasis nt_adapt(std::span<const Derivation> basis, const Arrangement& a, std::size_t k) {
  RestrictionData r = restrict_to(a, k);
  const RationalVector& alpha = a[k].coeffs();
  AdaptedBasis out{{basis.begin(), basis.end()}, {}};
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return basis[x].degree() < basis[y].degree(); });
  std::vector<Polynomial> values;
  std::vector<int> value_degrees;
  for (std::size_t idx : order) {
    Polynomial v = r.restrict_polynomial(out.basis[idx].apply_form(alpha));
    if (v.is_zero()) continue;
    if (!values.empty()) {
      if (auto c = express(v, values, value_degrees)) {
        for (std::size_t m = 0; m < values.size(); ++m)
          if (!(*c)[m].is_zero()) out.basis[idx] -= out.basis[out.failing[m]].times(r.lift_polynomial((*c)[m]));
        continue;
      }
    }
    values.push_back(std::move(v));
    value_degrees.push_back(out.basis[idx].degree());
    out.failing.push_back(idx);
  }
  std::sort(out.failing.begin(), out.failing.end());
  return out;
}

Derivation euler_restriction(const Derivation& theta, const Arrangement& a, const RestrictionData& r) {
  if (!membership(theta, a)) throw PreconditionError("rho is defined on D(A) only");
  std::vector<Polynomial> c;
  for (int i = 0; i < a.dim(); ++i)
    if (i != r.pivot) c.push_back(r.restrict_polynomial(theta[i]));
  return Derivation(std::move(c));
}

bool fst_check(const Arrangement& a, std::size_t k) {
  if (!is_free(deletion(a, k))) throw PreconditionError("the deletion is not free");
  RestrictionData r = restrict_to(a, k);
  auto p = derivation_module(a, {Route::syzygy_system, false});
  std::vector<ModuleVector> images;
  for (const auto& g : p.generators) {
    Derivation rho = euler_restriction(g, a, r);
    if (!membership(rho, r.restricted)) return false;
    if (!rho.is_zero()) images.push_back(rho.to_vector());
  }
  auto gb = groebner_basis(images);
  for (const auto& g : derivation_module(r.restricted, {Route::syzygy_system, false}).generators)
    if (!reduce_by_list(g.to_vector(), gb).is_zero()) return false;
  return true;
}

SpogConstruction spog_generators_from_basis(const Arrangement& a, std::size_t k) {
  SpogConstruction out;
  const Arrangement del = deletion(a, k);
  auto pd = derivation_module(del, {Route::syzygy_system, false});
  if (!is_free(pd, del)) {
    out.reason = "the deletion is not free";
    return out;
  }
  auto adapted = nt_adapt(pd.generators, a, k);
  out.basis = adapted.basis;
  if (adapted.failing.size() != 2) {
    out.reason = std::to_string(adapted.failing.size()) + " basis elements leave D(A), not 2";
    return out;
  }
  out.i = adapted.failing[0];
  out.j = adapted.failing[1];
  const Derivation& ti = out.basis[out.i];
  const Derivation& tj = out.basis[out.j];
  RestrictionData r = restrict_to(a, k);
  out.b = terao_B(a, r);
  const RationalVector& alpha = a[k].coeffs();
  auto gi = exact_divide(r.restrict_polynomial(ti.apply_form(alpha)), out.b);
  auto gj = exact_divide(r.restrict_polynomial(tj.apply_form(alpha)), out.b);
  if (!gi || !gj) throw FalsificationError("polynomial B", "theta(alpha_H) is not a multiple of B on H");
  out.g_i = *gi;
  out.g_j = *gj;
  Polynomial gcd = gcd_pair(out.g_i, out.g_j);
  if (!gcd.is_constant())
    throw FalsificationError("coprime values", "gcd(g_i, g_j) = " + gcd.to_string() + " for a basis with NT = 2");

  const Polynomial form = a[k].form();
  for (std::size_t m = 0; m < out.basis.size(); ++m)
    if (m != out.i && m != out.j) out.spog_generators.push_back(out.basis[m]);
  out.spog_generators.push_back(ti.times(form));
  out.spog_generators.push_back(tj.times(form));
  std::stable_sort(out.spog_generators.begin(), out.spog_generators.end(),
                   [](const Derivation& x, const Derivation& y) { return x.degree() < y.degree(); });
  out.level_element = ti.times(r.lift_polynomial(out.g_j)) - tj.times(r.lift_polynomial(out.g_i));
  out.poexp = degrees_of(out.spog_generators);
  out.level = out.level_element.degree();

  std::vector<Derivation> all = out.spog_generators;
  all.push_back(out.level_element);
  for (const auto& d : all)
    if (!membership(d, a)) throw FalsificationError("SPOG generators", "a constructed generator is not in D(A)");
  auto gb = groebner_basis(to_vectors(all));
  auto p = derivation_module(a);
  for (const auto& g : p.generators)
    if (!reduce_by_list(g.to_vector(), gb).is_zero())
      throw FalsificationError("SPOG generators", "the constructed derivations do not generate D(A)");
  auto spog = p.spog();
  if (!spog || spog->poexp != out.poexp || spog->level != out.level)
    throw FalsificationError("SPOG generators", "construction gives POexp " + degree_list(out.poexp) + " level " +
                                                    std::to_string(out.level) + " but D(A) has generator degrees " +
                                                    degree_list(p.generator_degrees()));
  out.applicable = true;
  return out;
}

bool spog_quotient_basis_check(const Arrangement& a, std::size_t k) {
  auto c = spog_generators_from_basis(a, k);
  if (!c.applicable) throw PreconditionError(c.reason);
  const Polynomial form = a[k].form();
  const Arrangement del = deletion(a, k);
  auto divide = [&](const Derivation& d) -> std::optional<Derivation> {
    std::vector<Polynomial> q;
    for (const auto& f : d.coeffs()) {
      auto r = exact_divide(f, form);
      if (!r) return std::nullopt;
      q.push_back(std::move(*r));
    }
    return Derivation(std::move(q));
  };
  const auto& gens = c.spog_generators;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    auto qs = divide(gens[s]);
    if (!qs) continue;
    for (std::size_t t = s + 1; t < gens.size(); ++t) {
      auto qt = divide(gens[t]);
      if (!qt) continue;
      std::vector<Derivation> candidate = gens;
      candidate[s] = *qs;
      candidate[t] = *qt;
      bool in_del = std::all_of(candidate.begin(), candidate.end(), [&](const Derivation& d) { return membership(d, del); });
      if (in_del && saito_check(candidate, del)) return true;
    }
  }
  return false;
}

}  // namespace logder
