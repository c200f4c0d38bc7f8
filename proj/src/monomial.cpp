#include "logder/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "logder/error.hpp"

namespace logder {

Monomial::Monomial(std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) > kMaxVars)
    throw ArityMismatch("at most 8 variables are supported");
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    int e = exponents[k];
    if (e < 0 || e > kMaxExponent) throw std::out_of_range("exponent out of range");
    bits_ |= static_cast<std::uint64_t>(e) << (8 * k);
    degree_ += e;
  }
}

Monomial Monomial::variable(int var, int power) {
  if (var < 0 || var >= kMaxVars) throw ArityMismatch("variable index out of range");
  if (power < 0 || power > kMaxExponent) throw std::out_of_range("exponent out of range");
  Monomial m;
  m.bits_ = static_cast<std::uint64_t>(power) << (8 * var);
  m.degree_ = power;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.bits_ = a.bits_ + b.bits_;
  if (m.bits_ & Monomial::kGuard) throw std::overflow_error("monomial exponent overflow");
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int k = 0; k < Monomial::kMaxVars; ++k) {
    std::uint64_t e = static_cast<std::uint64_t>(std::max(a[k], b[k]));
    m.bits_ |= e << (8 * k);
    m.degree_ += static_cast<int>(e);
  }
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < Monomial::kMaxVars; ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(nvars);
  for (int k = 0; k < nvars; ++k) e[k] = (*this)[k];
  return e;
}

std::string Monomial::to_string(int nvars) const {
  std::string s;
  for (int k = 0; k < nvars; ++k) {
    int e = (*this)[k];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(k + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::int64_t count_monomials(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // binom(nvars - 1 + degree, nvars - 1)
  std::int64_t r = 1;
  for (int k = 1; k < nvars; ++k) r = r * (degree + k) / k;
  return r;
}

namespace {

void enumerate(int nvars, int var, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate(nvars, var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> exps(nvars, 0);
  enumerate(nvars, 0, degree, exps, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
  return out;
}

}  // namespace logder
