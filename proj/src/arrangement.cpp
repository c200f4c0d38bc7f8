#include "logder/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "logder/error.hpp"

namespace logder {

Hyperplane::Hyperplane(RationalVector coeffs) : coeffs_(std::move(coeffs)) {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (it == coeffs_.end()) throw ArrangementError("zero linear form");
  Rational inv = 1 / *it;
  for (auto& c : coeffs_) c *= inv;
}

int Hyperplane::pivot() const {
  for (int k = 0; k < dim(); ++k)
    if (coeffs_[k] != 0) return k;
  return -1;
}

std::string Hyperplane::to_string() const { return form().to_string(); }

Arrangement::Arrangement(int dim) : dim_(dim) {
  if (dim < 0 || dim > Monomial::kMaxVars) throw ArrangementError("dimension must be between 0 and 8");
}

void Arrangement::add(const Hyperplane& h) {
  if (h.dim() != dim_)
    throw ArrangementError("form " + h.to_string() + " has length " + std::to_string(h.dim()) +
                           ", expected " + std::to_string(dim_));
  if (auto k = index_of(h))
    throw ArrangementError("duplicate hyperplane: forms " + std::to_string(*k) + " and " +
                           std::to_string(hyperplanes_.size()) + " are proportional (" + h.to_string() + ")");
  hyperplanes_.push_back(h);
}

Arrangement Arrangement::make(int dim, const std::vector<RationalVector>& forms) {
  Arrangement a(dim);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (static_cast<int>(forms[k].size()) != dim)
      throw ArrangementError("form " + std::to_string(k) + " has length " + std::to_string(forms[k].size()) +
                             ", expected " + std::to_string(dim));
    if (std::all_of(forms[k].begin(), forms[k].end(), [](const Rational& c) { return c == 0; }))
      throw ArrangementError("form " + std::to_string(k) + " is zero");
    a.add(Hyperplane(forms[k]));
  }
  return a;
}

std::optional<std::size_t> Arrangement::index_of(const Hyperplane& h) const {
  for (std::size_t k = 0; k < hyperplanes_.size(); ++k)
    if (hyperplanes_[k] == h) return k;
  return std::nullopt;
}

Polynomial Arrangement::defining_polynomial() const {
  Polynomial q = Polynomial::constant(dim_, 1);
  for (const auto& h : hyperplanes_) q *= h.form();
  return q;
}

std::string Arrangement::to_string() const {
  std::ostringstream os;
  os << "dim " << dim_ << ", " << size() << " hyperplanes:";
  for (const auto& h : hyperplanes_) os << " (" << h.to_string() << ")";
  return os.str();
}

Arrangement make_arrangement(int dim, const std::vector<RationalVector>& forms) {
  return Arrangement::make(dim, forms);
}

Arrangement deletion(const Arrangement& a, std::size_t k) {
  if (k >= a.size()) throw ArrangementError("hyperplane index out of range");
  std::vector<RationalVector> forms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != k) forms.push_back(a[i].coeffs());
  return Arrangement::make(a.dim(), forms);
}

Arrangement deletion(const Arrangement& a, const Hyperplane& h) {
  auto k = a.index_of(h);
  if (!k) throw ArrangementError("hyperplane " + h.to_string() + " is not in the arrangement");
  return deletion(a, *k);
}

Arrangement addition(const Arrangement& a, const Hyperplane& h) {
  std::vector<RationalVector> forms;
  for (const auto& x : a.hyperplanes()) forms.push_back(x.coeffs());
  forms.push_back(h.coeffs());
  return Arrangement::make(a.dim(), forms);
}

RationalVector RestrictionData::restrict_form(const RationalVector& v) const {
  RationalVector out;
  out.reserve(alpha.size() - 1);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (static_cast<int>(i) == pivot) continue;
    out.push_back(v[i] - v[pivot] * alpha[i]);
  }
  return out;
}

Polynomial RestrictionData::restrict_polynomial(const Polynomial& p) const {
  const int l = static_cast<int>(alpha.size());
  if (p.num_vars() != l) throw ArityMismatch("polynomial does not live on the ambient space");
  std::vector<Polynomial> images;
  Polynomial xj(l - 1);
  int m = 0;
  for (int i = 0; i < l; ++i) {
    if (i == pivot) {
      images.emplace_back(l - 1);
      continue;
    }
    Polynomial y = Polynomial::variable(l - 1, m++);
    if (alpha[i] != 0) xj -= alpha[i] * y;
    images.push_back(std::move(y));
  }
  images[pivot] = xj;
  return compose(p, images);
}

Polynomial RestrictionData::lift_polynomial(const Polynomial& q) const {
  const int l = static_cast<int>(alpha.size());
  if (q.num_vars() != l - 1) throw ArityMismatch("polynomial does not live on the hyperplane");
  std::vector<int> positions;
  for (int i = 0; i < l; ++i)
    if (i != pivot) positions.push_back(i);
  return q.relabel(l, positions);
}

Polynomial RestrictionData::reduce_mod(const Polynomial& p) const { return lift_polynomial(restrict_polynomial(p)); }

RestrictionData restrict_to(const Arrangement& a, std::size_t k) {
  if (k >= a.size()) throw ArrangementError("hyperplane index out of range");
  if (a.dim() == 0) throw ArrangementError("cannot restrict in dimension 0");
  RestrictionData r;
  const int l = a.dim();
  r.hyperplane = k;
  r.alpha = a[k].coeffs();
  r.pivot = a[k].pivot();
  r.change.push_back(r.alpha);
  for (int i = 0; i < l; ++i) {
    if (i == r.pivot) continue;
    RationalVector e(l, Rational(0));
    e[i] = 1;
    r.change.push_back(std::move(e));
  }
  Arrangement restricted(l - 1);
  std::vector<RationalVector> forms;
  r.image.assign(a.size(), -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == k) continue;
    Hyperplane h(r.restrict_form(a[i].coeffs()));
    auto at = std::find(forms.begin(), forms.end(), h.coeffs());
    if (at == forms.end()) {
      r.image[i] = static_cast<int>(forms.size());
      forms.push_back(h.coeffs());
      r.fibers.push_back({i});
    } else {
      auto m = static_cast<std::size_t>(at - forms.begin());
      r.image[i] = static_cast<int>(m);
      r.fibers[m].push_back(i);
    }
  }
  r.restricted = Arrangement::make(l - 1, forms);
  return r;
}

Polynomial terao_B(const Arrangement& a, const RestrictionData& r) {
  Polynomial qprime = Polynomial::constant(a.dim(), 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != r.hyperplane) qprime *= a[i].form();
  auto b = exact_divide(r.restrict_polynomial(qprime), r.restricted.defining_polynomial());
  if (!b) throw Error("restricted defining polynomial does not divide the restricted deletion polynomial");
  return b->monic();
}

Polynomial terao_B(const Arrangement& a, std::size_t k) { return terao_B(a, restrict_to(a, k)); }

std::string canonical_form(const Arrangement& a) {
  std::vector<Hyperplane> hs = a.hyperplanes();
  std::sort(hs.begin(), hs.end());
  std::string key = std::to_string(a.dim()) + "|";
  for (const auto& h : hs) {
    for (int i = 0; i < h.dim(); ++i) {
      if (i) key += ',';
      key += h[i].get_str();
    }
    key += ';';
  }
  return key;
}

}  // namespace logder
