#include "logder/module_vector.hpp"

#include <algorithm>
#include <sstream>

#include "logder/error.hpp"

namespace logder {

namespace {

bool term_before(const ModuleVector::Term& a, const ModuleVector::Term& b) {
  return compare_terms(a.position, a.monomial, b.position, b.monomial) < 0;
}

std::vector<ModuleVector::Term> merge(const std::vector<ModuleVector::Term>& a,
                                      const std::vector<ModuleVector::Term>& b, int sign) {
  std::vector<ModuleVector::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size()) c = 1;
    else if (j == b.size()) c = -1;
    else c = compare_terms(a[i].position, a[i].monomial, b[j].position, b[j].monomial);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back({b[j].position, b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].position, a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_shape(const ModuleVector& a, const ModuleVector& b) {
  if (a.num_vars() != b.num_vars() || a.shifts() != b.shifts())
    throw ArityMismatch("module vectors live in different free modules");
}

}  // namespace

ModuleVector::ModuleVector(int nvars, std::vector<int> shifts) : nvars_(nvars), shifts_(std::move(shifts)) {}

ModuleVector ModuleVector::from_components(std::span<const Polynomial> components, std::vector<int> shifts) {
  if (components.size() != shifts.size()) throw ArityMismatch("component count differs from shift count");
  int nvars = components.empty() ? 0 : components[0].num_vars();
  ModuleVector v(nvars, std::move(shifts));
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (components[k].num_vars() != nvars) throw ArityMismatch("components in different rings");
    for (const auto& t : components[k].terms())
      v.terms_.push_back({static_cast<int>(k), t.monomial, t.coeff});
  }
  return v;
}

ModuleVector ModuleVector::from_components(std::span<const Polynomial> components) {
  return from_components(components, std::vector<int>(components.size(), 0));
}

ModuleVector ModuleVector::unit(int nvars, std::vector<int> shifts, int position) {
  ModuleVector v(nvars, std::move(shifts));
  v.terms_.push_back({position, Monomial{}, Rational(1)});
  return v;
}

ModuleVector ModuleVector::from_terms(int nvars, std::vector<int> shifts, std::vector<Term> terms) {
  ModuleVector v(nvars, std::move(shifts));
  std::sort(terms.begin(), terms.end(), term_before);
  for (auto& t : terms) {
    if (t.position < 0 || t.position >= v.rank()) throw ArityMismatch("term position out of range");
    if (!v.terms_.empty() && v.terms_.back().position == t.position && v.terms_.back().monomial == t.monomial) {
      v.terms_.back().coeff += t.coeff;
      if (v.terms_.back().coeff == 0) v.terms_.pop_back();
    } else if (t.coeff != 0) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

int ModuleVector::degree() const {
  if (terms_.empty()) return -1;
  const auto& t = terms_.front();
  return t.monomial.degree() + shifts_[t.position];
}

bool ModuleVector::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() + shifts_[t.position] == d;
  });
}

Polynomial ModuleVector::component(int k) const {
  std::vector<Polynomial::Term> out;
  for (const auto& t : terms_)
    if (t.position == k) out.push_back({t.monomial, t.coeff});
  return Polynomial::from_terms(nvars_, std::move(out));
}

std::vector<Polynomial> ModuleVector::components() const {
  std::vector<std::vector<Polynomial::Term>> parts(shifts_.size());
  for (const auto& t : terms_) parts[t.position].push_back({t.monomial, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(nvars_, std::move(p)));
  return out;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  require_same_shape(*this, other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  require_same_shape(*this, other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

ModuleVector ModuleVector::times_term(const Monomial& m, const Rational& c) const {
  ModuleVector v(nvars_, shifts_);
  if (c == 0) return v;
  v.terms_.reserve(terms_.size());
  for (const auto& t : terms_) v.terms_.push_back({t.position, t.monomial * m, t.coeff * c});
  return v;
}

ModuleVector ModuleVector::times(const Polynomial& p) const {
  if (p.num_vars() != nvars_) throw ArityMismatch("scalar polynomial in a different ring");
  ModuleVector acc(nvars_, shifts_);
  if (p.is_zero() || is_zero()) return acc;
  std::vector<Term> prod;
  prod.reserve(p.size() * terms_.size());
  for (const auto& s : p.terms())
    for (const auto& t : terms_) prod.push_back({t.position, t.monomial * s.monomial, t.coeff * s.coeff});
  return from_terms(nvars_, shifts_, std::move(prod));
}

ModuleVector ModuleVector::monic() const {
  if (is_zero()) return *this;
  ModuleVector v = *this;
  v *= Rational(1 / terms_.front().coeff);
  return v;
}

ModuleVector ModuleVector::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > rank()) throw ArityMismatch("slice out of range");
  ModuleVector v(nvars_, std::vector<int>(shifts_.begin() + first, shifts_.begin() + first + count));
  for (const auto& t : terms_)
    if (t.position >= first && t.position < first + count)
      v.terms_.push_back({t.position - first, t.monomial, t.coeff});
  return v;
}

ModuleVector ModuleVector::permuted(std::span<const int> perm, std::vector<int> new_shifts) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({perm[t.position], t.monomial, t.coeff});
  return from_terms(nvars_, std::move(new_shifts), std::move(out));
}

std::string ModuleVector::to_string() const {
  std::ostringstream os;
  os << '(';
  auto comps = components();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k) os << ", ";
    os << comps[k].to_string();
  }
  os << ')';
  return os.str();
}

ModuleVector combine(std::span<const Polynomial> coeffs, std::span<const ModuleVector> vectors) {
  if (coeffs.size() != vectors.size()) throw ArityMismatch("coefficient count differs from vector count");
  if (vectors.empty()) throw ArityMismatch("empty combination has no ambient module");
  std::vector<ModuleVector::Term> acc;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (const auto& s : coeffs[k].terms())
      for (const auto& t : vectors[k].terms())
        acc.push_back({t.position, t.monomial * s.monomial, t.coeff * s.coeff});
  }
  return ModuleVector::from_terms(vectors[0].num_vars(), vectors[0].shifts(), std::move(acc));
}

}  // namespace logder
