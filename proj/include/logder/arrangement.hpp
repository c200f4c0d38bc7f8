#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logder/polynomial.hpp"
#include "logder/rational.hpp"

namespace logder {

/// Linear form scaled so that its first nonzero coefficient is 1.
class Hyperplane {
 public:
  /// Throws ArrangementError on the zero vector.
  explicit Hyperplane(RationalVector coeffs);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const RationalVector& coeffs() const { return coeffs_; }
  const Rational& operator[](int k) const { return coeffs_[k]; }
  /// Index of the first nonzero coefficient (which equals 1).
  int pivot() const;

  Polynomial form() const { return Polynomial::linear_form(coeffs_); }
  std::string to_string() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  /// Lexicographic on coefficients.
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) { return a.coeffs_ < b.coeffs_; }

 private:
  RationalVector coeffs_;
};

/// Central arrangement: an ordered list of distinct hyperplanes in dimension l.
class Arrangement {
 public:
  explicit Arrangement(int dim);

  /// Throws ArrangementError on zero or proportional forms, naming the pair.
  static Arrangement make(int dim, const std::vector<RationalVector>& forms);

  int dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const Hyperplane& operator[](std::size_t k) const { return hyperplanes_[k]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  std::optional<std::size_t> index_of(const Hyperplane& h) const;
  bool contains(const Hyperplane& h) const { return index_of(h).has_value(); }

  /// Product of the normalized forms.
  Polynomial defining_polynomial() const;
  std::string to_string() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  void add(const Hyperplane& h);

  int dim_;
  std::vector<Hyperplane> hyperplanes_;
};

Arrangement make_arrangement(int dim, const std::vector<RationalVector>& forms);

/// A minus its k-th hyperplane.
Arrangement deletion(const Arrangement& a, std::size_t k);
/// Throws ArrangementError when H is not in A.
Arrangement deletion(const Arrangement& a, const Hyperplane& h);
/// A with h appended. Throws ArrangementError when h is already present.
Arrangement addition(const Arrangement& a, const Hyperplane& h);

/// Restriction to H = H_k.
///
/// Coordinates on H: with j = pivot of alpha_H, the kept coordinates are
/// x_i for i != j in index order, renamed y_1, ..., y_{l-1}; a point of H is
/// recovered from them through x_j = -sum_{i != j} a_i x_i.
struct RestrictionData {
  Arrangement restricted{0};
  std::size_t hyperplane = 0;
  int pivot = 0;
  RationalVector alpha;
  /// New coordinates z = change * x, with z_1 = alpha_H and z_{1+m} = y_m.
  RationalMatrix change;
  /// image[k] = index in `restricted` of H_k cap H, or -1 for H itself.
  std::vector<int> image;
  /// fibers[m] = indices of the hyperplanes of A mapping to restricted hyperplane m.
  std::vector<std::vector<std::size_t>> fibers;

  /// Restriction of a polynomial on V to H, in the coordinates y.
  Polynomial restrict_polynomial(const Polynomial& p) const;
  /// Pullback of a polynomial in the coordinates y to V.
  Polynomial lift_polynomial(const Polynomial& q) const;
  /// Normal form of p modulo alpha_H: lift(restrict(p)); free of x_pivot.
  Polynomial reduce_mod(const Polynomial& p) const;
  RationalVector restrict_form(const RationalVector& v) const;
};

RestrictionData restrict_to(const Arrangement& a, std::size_t k);

/// Q(A \ {H}) restricted to H divided by Q(A^H), in the coordinates of
/// RestrictionData, normalized to leading coefficient 1. Degree is
/// |A| - 1 - |A^H|.
Polynomial terao_B(const Arrangement& a, std::size_t k);
Polynomial terao_B(const Arrangement& a, const RestrictionData& r);

/// Memo key: the sorted normalized forms, serialized.
std::string canonical_form(const Arrangement& a);

struct CorpusEntry {
  std::string name;
  std::string description;
  Arrangement arrangement{0};
  std::optional<std::size_t> distinguished;
};

/// Named arrangements: A<l>, B<l>, boolean-<l>, generic-<l>-<n> and the
/// worked examples ex-4.2, ex-4.3, ex-4.3-C, ex-4.4, ex-4.5, ex-4.6-H1,
/// ex-4.6-H2. Throws ArrangementError for unknown names.
CorpusEntry corpus(std::string_view name);
/// The fixed example names plus a few representatives of the families.
std::vector<std::string> corpus_names();

}  // namespace logder
