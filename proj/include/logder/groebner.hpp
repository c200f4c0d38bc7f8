#pragma once

#include <optional>
#include <span>
#include <vector>

#include "logder/module_vector.hpp"

namespace logder {

/// Position-over-term order on top of degrevlex. `priority[k]` is the rank
/// of position k (0 = most significant); empty means identity.
struct ModuleOrder {
  std::vector<int> priority;

  bool is_identity() const;
};

/// Incremental Buchberger for homogeneous submodules of a graded free module.
///
/// Pairs are selected lowest degree first and pruned with the Gebauer-Moeller
/// installation of the chain criterion (plus the product criterion when the
/// ambient module has rank one). Because input is homogeneous, after
/// complete_through(d) the basis is a Groebner basis up to degree d, which
/// is what degree-ascending minimalization relies on.
class GroebnerBuilder {
 public:
  GroebnerBuilder(int nvars, std::vector<int> shifts);

  /// Remainder of full division by the current basis.
  ModuleVector reduce(const ModuleVector& v) const;

  /// Reduces v and, if the remainder is nonzero, adds it. Returns whether
  /// anything was added. Throws NotHomogeneous.
  bool insert(const ModuleVector& v);

  void complete_through(int degree);
  void complete();

  /// Interreduced, monic, sorted. Call complete() first for a true reduced
  /// Groebner basis.
  std::vector<ModuleVector> reduced_basis() const;

  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t element_count() const { return elements_.size(); }

 private:
  struct Pair {
    int i;
    int j;
    int degree;
    int position;
    Monomial lcm;
  };

  void check_shape(const ModuleVector& v) const;
  int find_divisor(int position, const Monomial& m) const;
  void add_element(ModuleVector h);
  ModuleVector s_vector(const Pair& p) const;

  int nvars_;
  std::vector<int> shifts_;
  std::vector<ModuleVector> elements_;
  std::vector<bool> active_;
  // Active leading monomials per position, as (monomial, element index).
  std::vector<std::vector<std::pair<Monomial, int>>> leads_;
  std::vector<Pair> pairs_;
};

/// Reduced Groebner basis of the submodule generated by gens.
std::vector<ModuleVector> groebner_basis(std::span<const ModuleVector> gens,
                                         const ModuleOrder& order = {});

/// Remainder of division by `basis` (any list; a Groebner basis gives a
/// membership test: zero iff v lies in the submodule).
ModuleVector reduce_by_list(const ModuleVector& v, std::span<const ModuleVector> basis);
ModuleVector normal_form(const ModuleVector& v, std::span<const ModuleVector> gb,
                         const ModuleOrder& order = {});

/// Generators of {c : sum c_k gens_k = 0} in S[-deg gens_0] + ... via the
/// lifted Groebner construction. `degrees` gives the degree of each
/// generator (needed when a generator is zero); default is gens[k].degree().
std::vector<ModuleVector> syzygies(std::span<const ModuleVector> gens,
                                   std::span<const int> degrees = {});
std::vector<ModuleVector> syzygies(std::span<const Polynomial> gens,
                                   std::span<const int> degrees = {});

/// Minimal generating subset (degree-ascending sweep). The degree multiset
/// of the result is an invariant of the module.
std::vector<ModuleVector> minimalize(std::span<const ModuleVector> gens);
/// Indices into gens of the kept generators.
std::vector<std::size_t> minimalize_indices(std::span<const ModuleVector> gens);

/// Coefficients c with sum c_k gens_k == target, or nullopt when target is
/// outside the submodule.
std::optional<std::vector<Polynomial>> express(const ModuleVector& target,
                                               std::span<const ModuleVector> gens,
                                               std::span<const int> degrees = {});
std::optional<std::vector<Polynomial>> express(const Polynomial& target,
                                               std::span<const Polynomial> gens,
                                               std::span<const int> degrees = {});

/// Greatest common divisor via the generator of (f) ∩ (g) from syzygies of
/// (f, g). Primitive with positive leading coefficient. Throws DivisionByZero
/// when both are zero.
Polynomial gcd_pair(const Polynomial& f, const Polynomial& g);

/// Scalar view of polynomials as rank-one module vectors.
ModuleVector as_vector(const Polynomial& p, int shift = 0);

}  // namespace logder
