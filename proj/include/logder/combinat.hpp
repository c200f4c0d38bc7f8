#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"

namespace logder {

struct Flat {
  /// Bit k set iff hyperplane k contains the flat.
  std::uint64_t members = 0;
  /// Codimension.
  int rank = 0;
  /// Reduced row-echelon basis of the span of the member forms.
  RationalMatrix normals;
  std::int64_t mobius = 0;
};

/// Intersection lattice ordered by reverse inclusion, V at the bottom.
class FlatLattice {
 public:
  /// Throws LatticeTooLarge above 64 hyperplanes or `max_flats` flats.
  static FlatLattice build(const Arrangement& a, std::size_t max_flats = 100000);

  int dim() const { return dim_; }
  std::size_t num_hyperplanes() const { return n_; }
  /// Sorted by rank, then by echelon basis.
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  std::vector<std::size_t> rank_sizes() const;
  int rank() const { return flats_.empty() ? 0 : flats_.back().rank; }
  /// Position of the flat with these members, if it is one.
  std::optional<std::size_t> find(std::uint64_t members) const;

 private:
  int dim_ = 0;
  std::size_t n_ = 0;
  std::vector<Flat> flats_;
};

/// Monic integer polynomial in t; coeffs[k] multiplies t^k.
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t evaluate(std::int64_t t) const;
  /// Integer roots with multiplicity, sorted, when the polynomial splits into
  /// linear factors over the integers.
  std::optional<std::vector<std::int64_t>> integer_roots() const;
  /// "t^4 - 10t^3 + 35t^2 - 50t + 24".
  std::string expanded() const;
  /// "(t - 1)(t - 4)^2" when it splits over the integers, else expanded().
  std::string to_string() const;

  static CharPoly from_roots(const std::vector<std::int64_t>& roots);
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

CharPoly characteristic_polynomial(const FlatLattice& lattice);
CharPoly characteristic_polynomial(const Arrangement& a);

/// Does `divisor` divide `dividend` over the rationals?
bool charpoly_divides(const CharPoly& divisor, const CharPoly& dividend);
/// dividend / divisor when exact.
std::optional<CharPoly> charpoly_quotient(const CharPoly& dividend, const CharPoly& divisor);

/// Ranked-lattice isomorphism, searched as a bijection of atoms carrying
/// flats to flats. Throws LatticeTooLarge when either lattice exceeds
/// `max_flats`.
bool lattice_isomorphic(const FlatLattice& a, const FlatLattice& b, std::size_t max_flats = 2000);

}  // namespace logder
