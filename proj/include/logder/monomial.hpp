#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace logder {

/// Exponent vector packed one byte per variable.
///
/// Variable k lives in byte k. The top bit of every byte is a guard bit, so
/// each exponent is at most 127 and divisibility can be tested with a single
/// subtraction. The ordering is degree-reverse-lexicographic with
/// x_1 > x_2 > ... > x_l.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 127;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int var, int power = 1);

  int operator[](int var) const { return static_cast<int>((bits_ >> (8 * var)) & 0xffu); }
  int degree() const { return degree_; }
  std::uint64_t bits() const { return bits_; }
  bool is_one() const { return bits_ == 0; }

  bool divides(const Monomial& other) const {
    return degree_ <= other.degree_ &&
           (((other.bits_ | kGuard) - bits_) & kGuard) == kGuard;
  }

  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    Monomial m;
    m.bits_ = bits_ - divisor.bits_;
    m.degree_ = degree_ - divisor.degree_;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return b.bits_ <=> a.bits_;
  }

  std::vector<int> exponents(int nvars) const;
  std::string to_string(int nvars) const;

 private:
  static constexpr std::uint64_t kGuard = 0x8080808080808080ull;

  std::uint64_t bits_ = 0;
  int degree_ = 0;
};

/// Number of monomials of total degree d in n variables.
std::int64_t count_monomials(int nvars, int degree);

/// All monomials of total degree d in n variables, in decreasing order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace logder

template <>
struct std::hash<logder::Monomial> {
  std::size_t operator()(const logder::Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.bits());
  }
};
