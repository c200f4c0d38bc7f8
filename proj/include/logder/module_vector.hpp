#pragma once

#include <span>
#include <string>
#include <vector>

#include "logder/polynomial.hpp"

namespace logder {

/// Element of a graded free module  S[-shift_0] + ... + S[-shift_{r-1}].
///
/// Stored as a flat term list sorted position-over-term: position ascending
/// (position 0 is the most significant), then monomial descending. The
/// degree of a term (k, m) is deg(m) + shift_k.
class ModuleVector {
 public:
  struct Term {
    int position;
    Monomial monomial;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  ModuleVector() = default;
  ModuleVector(int nvars, std::vector<int> shifts);

  static ModuleVector from_components(std::span<const Polynomial> components,
                                      std::vector<int> shifts);
  static ModuleVector from_components(std::span<const Polynomial> components);
  static ModuleVector unit(int nvars, std::vector<int> shifts, int position);
  static ModuleVector from_terms(int nvars, std::vector<int> shifts, std::vector<Term> terms);

  int num_vars() const { return nvars_; }
  int rank() const { return static_cast<int>(shifts_.size()); }
  const std::vector<int>& shifts() const { return shifts_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  /// Degree of the leading term (the common degree when homogeneous).
  int degree() const;
  bool is_homogeneous() const;

  Polynomial component(int k) const;
  std::vector<Polynomial> components() const;

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector& operator*=(const Rational& c);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rational& c, ModuleVector v) { return v *= c; }

  ModuleVector times_term(const Monomial& m, const Rational& c) const;
  ModuleVector times(const Polynomial& p) const;
  ModuleVector monic() const;

  /// Positions [first, first + count) as a vector of that rank.
  ModuleVector slice(int first, int count) const;
  /// Positions permuted: new position of old position k is perm[k].
  ModuleVector permuted(std::span<const int> perm, std::vector<int> new_shifts) const;

  std::string to_string() const;

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  int nvars_ = 0;
  std::vector<int> shifts_;
  std::vector<Term> terms_;

  friend class GroebnerBuilder;
  friend ModuleVector reduce_by_list(const ModuleVector&, std::span<const ModuleVector>);
};

/// Module-order comparison of two terms: negative when a comes first
/// (is larger), positive when b does.
inline int compare_terms(int pos_a, const Monomial& a, int pos_b, const Monomial& b) {
  if (pos_a != pos_b) return pos_a < pos_b ? -1 : 1;
  auto c = a <=> b;
  if (c == 0) return 0;
  return c > 0 ? -1 : 1;
}

/// Sum_k coeffs[k] * vectors[k].
ModuleVector combine(std::span<const Polynomial> coeffs, std::span<const ModuleVector> vectors);

}  // namespace logder
