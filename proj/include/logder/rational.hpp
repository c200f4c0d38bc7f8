#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace logder {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every value goes through canonicalize(), which gmpxx does for
// all arithmetic and for the string constructor used by parse_rational.
using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses `p` or `p/q` (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

}  // namespace logder
