#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logder/monomial.hpp"
#include "logder/rational.hpp"

namespace logder {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
///
/// Terms are kept strictly decreasing in degrevlex order with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(int nvars, const Monomial& m, const Rational& c);
  static Polynomial linear_form(std::span<const Rational> coeffs);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int num_vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }

  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
  int max_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial derivative(int var) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Integer coefficients with content 1 and a positive leading coefficient.
  Polynomial primitive() const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Same polynomial viewed in a ring with `nvars` variables, variable k
  /// mapped to variable positions[k]. Used to move between a hyperplane and
  /// the ambient space.
  Polynomial relabel(int nvars, std::span<const int> positions) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
};

enum class ArithKind { add, sub, mul };

/// Exact a (op) b. Throws ArityMismatch when the variable counts differ.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithKind kind);

Polynomial power(const Polynomial& p, int exponent);

/// p(images[0], ..., images[l-1]); all images share one variable count.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

/// p composed with x -> M x, i.e. x_i -> sum_j M[i][j] x_j.
/// Throws SingularMatrix unless M is invertible.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m);

/// q with q * den == num, or nullopt when den does not divide num.
/// Throws DivisionByZero for den == 0.
std::optional<Polynomial> exact_divide(const Polynomial& num, const Polynomial& den);

}  // namespace logder
