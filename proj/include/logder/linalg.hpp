#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "logder/rational.hpp"

namespace logder {

struct RrefResult {
  RationalMatrix rows;            // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RrefResult rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
Rational determinant(RationalMatrix m);
/// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);
RationalMatrix identity_matrix(std::size_t n);

/// Scales so the first nonzero entry is 1; the zero vector is returned as is.
RationalVector normalize_leading_one(RationalVector v);

}  // namespace logder
