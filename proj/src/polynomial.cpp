#include "logder/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "logder/error.hpp"
#include "logder/linalg.hpp"

namespace logder {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ArityMismatch("polynomials in " + std::to_string(a.num_vars()) + " and " +
                        std::to_string(b.num_vars()) + " variables");
}

// Merge two decreasing term lists computing a + sign * b.
std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars) throw ArityMismatch("unsupported variable count");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw ArityMismatch("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(var), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::linear_form(std::span<const Rational> coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) p.terms_.push_back({Monomial::variable(static_cast<int>(k)), coeffs[k]});
  // x_1 > x_2 > ... already decreasing
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other);
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_arity(*this, other);
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.num_vars());
  if (a.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial::from_terms(a.num_vars(), std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial p(nvars_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial[var];
    if (e == 0) continue;
    out.push_back({t.monomial.quotient(Monomial::variable(var)), t.coeff * e});
  }
  return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  Polynomial p = *this;
  p *= inv;
  return p;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff() < 0) scale = -scale;
  Polynomial p = *this;
  p *= scale;
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ArityMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int k = 0; k < nvars_; ++k) {
      int e = t.monomial[k];
      for (int r = 0; r < e; ++r) v *= point[k];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::relabel(int nvars, std::span<const int> positions) const {
  if (static_cast<int>(positions.size()) != nvars_) throw ArityMismatch("relabel map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<int> exps(nvars, 0);
  for (const auto& t : terms_) {
    std::fill(exps.begin(), exps.end(), 0);
    for (int k = 0; k < nvars_; ++k) {
      int e = t.monomial[k];
      if (e == 0) continue;
      if (positions[k] < 0 || positions[k] >= nvars) throw ArityMismatch("relabel drops a used variable");
      exps[positions[k]] += e;
    }
    out.push_back({Monomial(exps), t.coeff});
  }
  return from_terms(nvars, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.monomial.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << t.monomial.to_string(nvars_);
    }
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  return a;
}

Polynomial power(const Polynomial& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Polynomial result = Polynomial::constant(p.num_vars(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != p.num_vars()) throw ArityMismatch("compose needs one image per variable");
  int target = images.empty() ? 0 : images[0].num_vars();
  for (const auto& q : images)
    if (q.num_vars() != target) throw ArityMismatch("compose images disagree on variable count");
  // powers[k][e] = images[k]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto pow_of = [&](std::size_t k, int e) -> const Polynomial& {
    auto& v = powers[k];
    if (v.empty()) v.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[k]);
    return v[e];
  };
  std::vector<Polynomial::Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t k = 0; k < images.size(); ++k) {
      int e = t.monomial[static_cast<int>(k)];
      if (e > 0) term *= pow_of(k, e);
    }
    for (auto& s : term.terms()) acc.push_back(s);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m) {
  const auto n = static_cast<std::size_t>(p.num_vars());
  if (m.size() != n) throw ArityMismatch("matrix size does not match variable count");
  for (const auto& row : m)
    if (row.size() != n) throw ArityMismatch("matrix is not square");
  if (determinant(m) == 0) throw SingularMatrix("substitution matrix is singular");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (const auto& row : m) images.push_back(Polynomial::linear_form(row));
  return compose(p, images);
}

std::optional<Polynomial> exact_divide(const Polynomial& num, const Polynomial& den) {
  require_same_arity(num, den);
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const int n = num.num_vars();
  std::vector<Polynomial::Term> quotient;
  Polynomial rest = num;
  const Monomial& lead = den.leading_monomial();
  const Rational& lc = den.leading_coeff();
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (!lead.divides(t.monomial)) return std::nullopt;
    Monomial m = t.monomial.quotient(lead);
    Rational c = t.coeff / lc;
    rest -= den.times_term(m, c);
    quotient.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(n, std::move(quotient));
}

}  // namespace logder
