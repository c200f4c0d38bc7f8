#pragma once

#include <random>
#include <vector>

#include "doctest.h"
#include "logder/module_vector.hpp"
#include "logder/polynomial.hpp"

namespace testing_support {

using logder::ModuleVector;
using logder::Monomial;
using logder::Polynomial;
using logder::Rational;

inline std::vector<Polynomial> vars(int n) {
  std::vector<Polynomial> x;
  for (int k = 0; k < n; ++k) x.push_back(Polynomial::variable(n, k));
  return x;
}

inline Polynomial cst(int n, long c) { return Polynomial::constant(n, Rational(c)); }

// Plain fraction-field Gaussian elimination, written independently of the
// library so that it can serve as a reference.
inline std::size_t brute_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Coordinates of the degree-D slice of a free module: all (position, monomial).
struct Slice {
  std::vector<std::pair<int, Monomial>> basis;

  Slice(int nvars, const std::vector<int>& shifts, int degree) {
    for (std::size_t k = 0; k < shifts.size(); ++k) {
      int d = degree - shifts[k];
      if (d < 0) continue;
      for (const auto& m : logder::monomials_of_degree(nvars, d)) basis.emplace_back(static_cast<int>(k), m);
    }
  }

  std::vector<Rational> coords(const ModuleVector& v) const {
    std::vector<Rational> out(basis.size(), Rational(0));
    for (const auto& t : v.terms())
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].first == t.position && basis[i].second == t.monomial) out[i] = t.coeff;
    return out;
  }
};

// Rows: every monomial multiple of every generator that lands in degree D.
inline std::vector<std::vector<Rational>> span_rows(const std::vector<ModuleVector>& gens, const Slice& s,
                                                    int nvars, int degree) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int d = degree - g.degree();
    if (d < 0) continue;
    for (const auto& m : logder::monomials_of_degree(nvars, d)) rows.push_back(s.coords(g.times_term(m, 1)));
  }
  return rows;
}

inline std::size_t slice_dimension(const std::vector<ModuleVector>& gens, int nvars,
                                   const std::vector<int>& shifts, int degree) {
  Slice s(nvars, shifts, degree);
  return brute_rank(span_rows(gens, s, nvars, degree));
}

inline bool slice_member(const ModuleVector& v, const std::vector<ModuleVector>& gens) {
  Slice s(v.num_vars(), v.shifts(), v.degree());
  auto rows = span_rows(gens, s, v.num_vars(), v.degree());
  std::size_t before = brute_rank(rows);
  rows.push_back(s.coords(v));
  return brute_rank(rows) == before;
}

// Dimension of the degree-D part of the kernel of  (c_k) -> sum c_k gens_k.
inline std::size_t syzygy_slice_dimension(const std::vector<ModuleVector>& gens, int degree) {
  const int n = gens[0].num_vars();
  std::size_t unknowns = 0;
  for (const auto& g : gens) {
    int d = degree - g.degree();
    if (d >= 0) unknowns += static_cast<std::size_t>(logder::count_monomials(n, d));
  }
  Slice s(n, gens[0].shifts(), degree);
  return unknowns - brute_rank(span_rows(gens, s, n, degree));
}

inline Polynomial random_poly(std::mt19937& rng, int nvars, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree), nterms(0, max_terms);
  std::vector<Polynomial::Term> terms;
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(nvars, 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    for (int i = 0; i < d; ++i) ++e[pick(rng)];
    Rational c(coeff(rng), 1 + (t % 3));
    c.canonicalize();
    terms.push_back({Monomial(e), c});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

inline Polynomial random_homogeneous(std::mt19937& rng, int nvars, int degree, int max_terms) {
  std::uniform_int_distribution<int> coeff(-4, 4), nterms(1, max_terms);
  std::vector<Polynomial::Term> terms;
  auto monos = logder::monomials_of_degree(nvars, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) terms.push_back({monos[pick(rng)], Rational(coeff(rng))});
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace testing_support

namespace doctest {
template <>
struct StringMaker<logder::Polynomial> {
  static String convert(const logder::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<logder::ModuleVector> {
  static String convert(const logder::ModuleVector& v) { return v.to_string().c_str(); }
};
}  // namespace doctest
