#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/combinat.hpp"

namespace logder {

using Exponents = std::vector<int>;

/// "(1,3,4,4)".
std::string format_exponents(const Exponents& e);

struct AdditionVerdict {
  enum class Kind { free, restriction_not_matching, insufficient_data };
  Kind kind = Kind::insufficient_data;
  /// exp(A) when kind == free.
  Exponents exponents;
};

/// Addition-deletion from exponent data alone. Throws PreconditionError when
/// |exp_deletion| != |exp_restriction| + 1. Exponent 0 (non-essential
/// arrangements) is accepted.
AdditionVerdict addition_check(const Exponents& exp_deletion, const Exponents& exp_restriction);
AdditionVerdict addition_check(const std::optional<Exponents>& exp_deletion,
                               const std::optional<Exponents>& exp_restriction);

struct SpogPrediction {
  /// 1-based positions in the sorted exp(A').
  int i = 0;
  int j = 0;
  int level = 0;
  Exponents restriction_exponents;
  Exponents poexp;

  friend bool operator==(const SpogPrediction&, const SpogPrediction&) = default;
};

/// Pairs 2 <= i < j <= l with d_j < d = d_i + d_j + nH - n' <= d_{j+1}
/// (d_{l+1} = infinity). Predictions with equal data are listed once.
std::vector<SpogPrediction> spog_predict(Exponents exp_deletion, std::int64_t n_deletion,
                                         std::int64_t n_restriction);

/// The prediction whose restriction exponents equal exp_restriction.
/// Throws PreconditionError when an exponent sum disagrees with its
/// cardinality, and Error when two matching predictions disagree.
std::optional<SpogPrediction> spog_match(Exponents exp_deletion, Exponents exp_restriction,
                                         std::int64_t n_deletion, std::int64_t n_restriction);

/// exp_H with the root of chi / chi_H added, when chi_H divides chi with a
/// linear integer quotient.
std::optional<Exponents> division_exponents(const CharPoly& chi, const CharPoly& chi_restriction,
                                            const Exponents& exp_restriction);

struct DivisionVerdict {
  bool holds = false;
  Exponents exponents;
};

/// A^{H_k} free (by derivmod) and chi(A^H) | chi(A).
DivisionVerdict division_check(const Arrangement& a, std::size_t k);

/// chi(A) equals prod (t - d_i). Throws PreconditionError when A is not free.
bool terao_factorization_check(const Arrangement& a);

struct Claim {
  enum class Kind { free, spog };
  Kind kind = Kind::free;
  /// exp(A) for free, POexp(A) for spog.
  Exponents exponents;
  int level = 0;

  std::string to_string() const;
  friend bool operator==(const Claim&, const Claim&) = default;
};

struct CertificateNode {
  std::string key;
  Arrangement arrangement{0};
  Claim claim;
  /// base-dim<=2, base-boolean, empty, division, addition, spog-criterion
  std::string rule;
  /// Node indices: [restriction] for division, [deletion, restriction]
  /// for addition and spog-criterion.
  std::vector<std::size_t> children;
  std::optional<RationalVector> witness;
};

/// Proof tree; nodes[root] carries the claim about the input.
struct Certificate {
  std::vector<CertificateNode> nodes;
  std::size_t root = 0;

  std::string to_text() const;
  std::string to_json() const;
  /// Throws ParseError on malformed input.
  static Certificate from_json(const std::string& text);
};

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Re-derives every node from its children: restriction and deletion are
/// recomputed from the witness, characteristic polynomials from the
/// lattices, and each rule's exponent arithmetic is redone.
ReplayResult replay(const Certificate& c);

struct SearchResult {
  enum class Status { found, not_found, budget_exhausted };
  Status status = Status::not_found;
  std::optional<Certificate> certificate;
  std::size_t expansions = 0;
};

/// Searches for freeness proofs by the addition and division theorems.
/// Memoized across calls on canonical_form; deterministic for a fixed budget.
class StairSearch {
 public:
  explicit StairSearch(std::size_t budget = 20000) : budget_(budget) {}

  SearchResult stair_free(const Arrangement& a);
  SearchResult stair_spog(const Arrangement& a);

 private:
  struct Entry {
    bool found = false;
    Exponents exponents;
    std::string rule;
    std::vector<std::string> children;
    std::optional<RationalVector> witness;
    Arrangement arrangement{0};
  };

  const Entry& solve(const Arrangement& a);
  const CharPoly& chi(const Arrangement& a, const std::string& key);
  std::size_t emit(const std::string& key, Certificate& c, std::map<std::string, std::size_t>& placed) const;

  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::map<std::string, Entry> memo_;
  std::map<std::string, CharPoly> chi_;
};

SearchResult stair_free_certify(const Arrangement& a, std::size_t budget = 20000);
SearchResult stair_spog_certify(const Arrangement& a, std::size_t budget = 20000);

struct ArgumentStep {
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// The chain for B4 minus x1: A' free, B = A' + L SPOG by the two-sided
/// exponent criterion, C = B + H free with |C^H| = 9. Every step is checked
/// with derivmod.
std::vector<ArgumentStep> b4_deletion_freeness_argument();

}  // namespace logder
