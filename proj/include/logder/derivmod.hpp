#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/module_vector.hpp"

namespace logder {

/// theta = sum_i f_i d/dx_i on an l-dimensional space.
class Derivation {
 public:
  Derivation() = default;
  /// One coefficient per variable; throws ArityMismatch otherwise.
  explicit Derivation(std::vector<Polynomial> coeffs);

  static Derivation euler(int dim);
  static Derivation partial(int dim, int i);
  static Derivation zero(int dim);
  /// From a rank-l vector with zero shifts.
  static Derivation from_vector(const ModuleVector& v);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& operator[](int i) const { return coeffs_[i]; }
  bool is_zero() const;
  /// Degree of the coefficients; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial apply(const Polynomial& p) const;
  /// theta(alpha) for the linear form with these coefficients.
  Polynomial apply_form(const RationalVector& alpha) const;

  Derivation times(const Polynomial& p) const;
  Derivation& operator+=(const Derivation& other);
  Derivation& operator-=(const Derivation& other);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }

  ModuleVector to_vector() const;
  /// "(x1^2 - x2)*D1 + x2*D3"
  std::string to_string() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

struct SpogData {
  /// Generator degrees minus the level element, sorted.
  std::vector<int> poexp;
  int level = 0;
  /// Index of the level element among the presentation's generators.
  std::size_t level_generator = 0;

  friend bool operator==(const SpogData&, const SpogData&) = default;
};

/// Minimal generators of D(A) and the minimal first syzygies among them.
struct Presentation {
  int dim = 0;
  std::size_t num_hyperplanes = 0;
  /// Sorted by degree.
  std::vector<Derivation> generators;
  /// Elements of  S[-deg g_1] + ... + S[-deg g_m].
  std::vector<ModuleVector> relations;
  bool relations_computed = false;

  std::size_t g() const { return generators.size(); }
  std::vector<int> generator_degrees() const;
  std::vector<int> relation_degrees() const;
  bool is_free() const { return generators.size() == static_cast<std::size_t>(dim); }
  std::optional<std::vector<int>> exponents() const;
  /// Requires relations.
  std::optional<SpogData> spog() const;
  /// dim_Q of the degree-d piece of the module presented by generators
  /// and relations. Requires relations.
  std::int64_t hilbert_function(int d) const;
  /// hilbert_function(0), ..., hilbert_function(max_degree).
  std::vector<std::int64_t> hilbert_values(int max_degree) const;
  /// The relation module has no syzygies of its own, i.e. pd D(A) <= 1.
  /// Requires relations.
  bool relations_free() const;
};

enum class Route {
  /// Add one hyperplane at a time: D(B + H) from D(B) through syzygies of
  /// the values theta_k(alpha_H) on H.
  iterated,
  /// One syzygy computation on the (l + n)-column system
  /// sum_i f_i a_{H,i} - g_H alpha_H = 0.
  syzygy_system,
};

struct ModuleOptions {
  Route route = Route::syzygy_system;
  bool relations = true;
};

Presentation derivation_module(const Arrangement& a, const ModuleOptions& options = {});

/// Exponents when D(A) is free. The basis is Saito-verified; failure throws
/// Error (an engine fault, not a statement about A).
std::optional<std::vector<int>> is_free(const Arrangement& a);
std::optional<std::vector<int>> is_free(const Presentation& p, const Arrangement& a);
std::optional<SpogData> is_spog(const Arrangement& a);
std::size_t g_of(const Arrangement& a);

struct Betti {
  std::vector<int> generators;
  std::vector<int> relations;

  friend bool operator==(const Betti&, const Betti&) = default;
};

struct BettiData {
  Betti d;
  /// D(A) with one degree-1 generator removed; absent when there is none
  /// (the empty arrangement).
  std::optional<Betti> d0;
};

/// Requires relations.
BettiData betti(const Presentation& p);
BettiData betti(const Arrangement& a);

/// theta(alpha_H) divisible by alpha_H for every H.
bool membership(const Derivation& theta, const Arrangement& a);

/// det of the coefficient matrix equals c * Q(A) with c a nonzero rational.
/// Throws PreconditionError unless there are l derivations, all in D(A).
bool saito_check(std::span<const Derivation> derivs, const Arrangement& a);

/// Basis elements of D(A \ H_k) outside D(A). Throws PreconditionError when
/// the basis fails saito_check for the deletion.
std::size_t nt_count(std::span<const Derivation> basis, const Arrangement& a, std::size_t k);

struct AdaptedBasis {
  std::vector<Derivation> basis;
  /// Indices of the elements outside D(A).
  std::vector<std::size_t> failing;
};

/// Changes a basis of D(A \ H_k) so that as few elements as possible leave
/// D(A): in degree order, an element whose value on H_k lies in the ideal
/// of the earlier values is corrected by the matching combination. The
/// failing elements then minimally generate that ideal, so their count is
/// the least over all bases.
AdaptedBasis nt_adapt(std::span<const Derivation> basis, const Arrangement& a, std::size_t k);

/// rho: D(A) -> D(A^H) in the coordinates of `r`. Throws PreconditionError
/// when theta is not in D(A).
Derivation euler_restriction(const Derivation& theta, const Arrangement& a, const RestrictionData& r);

/// The rho-images of the minimal generators of D(A) generate D(A^H).
/// Throws PreconditionError when A \ H_k is not free.
bool fst_check(const Arrangement& a, std::size_t k);

struct SpogConstruction {
  bool applicable = false;
  std::string reason;
  /// Adapted basis of D(A') and the two failing positions i < j in it.
  std::vector<Derivation> basis;
  std::size_t i = 0;
  std::size_t j = 0;
  /// theta_i(alpha_H) = g_i B and theta_j(alpha_H) = g_j B on H.
  Polynomial b;
  Polynomial g_i;
  Polynomial g_j;
  /// {theta_k}_{k != i,j}, alpha_H theta_i, alpha_H theta_j; sorted by degree.
  std::vector<Derivation> spog_generators;
  /// G_j theta_i - G_i theta_j with G the pullbacks of g.
  Derivation level_element;
  std::vector<int> poexp;
  int level = 0;
};

/// SPOG generators of D(A) from a basis of D(A \ H_k) with exactly two
/// elements outside D(A). Throws FalsificationError when the construction
/// breaks (B not dividing the values, gcd(g_i, g_j) != 1, or the result not
/// generating D(A) with the degrees found by is_spog).
SpogConstruction spog_generators_from_basis(const Arrangement& a, std::size_t k);

/// For SPOG A with free A \ H_k: the SPOG generators built above contain
/// two multiples of alpha_H whose quotients, with the remaining non-level
/// generators, pass saito_check for A \ H_k. Throws PreconditionError
/// when the construction does not apply.
bool spog_quotient_basis_check(const Arrangement& a, std::size_t k);

/// dim_Q D(A)_d by exact linear algebra on coefficient unknowns, without
/// Groebner bases.
std::int64_t graded_slice_oracle(const Arrangement& a, int d);

/// dim_Q of the degree-d piece of S[-s_1] + ... in `vars` variables.
std::int64_t free_hilbert(int vars, std::span<const int> shifts, int d);

}  // namespace logder
