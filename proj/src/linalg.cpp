#include "logder/linalg.hpp"

#include "logder/error.hpp"

namespace logder {

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw ArityMismatch("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix id(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  RationalMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ArityMismatch("inverse of a non-square matrix");
    aug[i] = m[i];
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = 1;
  }
  auto r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(r.rows[i].begin() + static_cast<std::ptrdiff_t>(n), r.rows[i].end());
  return inv;
}

RationalVector normalize_leading_one(RationalVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    Rational inv = 1 / x;
    for (auto& y : v) y *= inv;
    break;
  }
  return v;
}

}  // namespace logder
