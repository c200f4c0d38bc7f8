#include <algorithm>
#include <map>
#include <unordered_map>

#include "logder/derivmod.hpp"

namespace logder {

namespace {

using SparseRow = std::vector<std::pair<int, Rational>>;

// row -= f * pivot, both sorted by column.
SparseRow subtract(const SparseRow& row, const Rational& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -f * pivot[b].second);
      ++b;
    } else {
      Rational c = row[a].second - f * pivot[b].second;
      if (c != 0) out.emplace_back(row[a].first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

std::int64_t graded_slice_oracle(const Arrangement& a, int d) {
  if (d < 0) return 0;
  const int l = a.dim();
  const auto mons = monomials_of_degree(l, d);
  const int m = static_cast<int>(mons.size());
  const std::int64_t unknowns = static_cast<std::int64_t>(l) * m;
  if (a.empty() || m == 0) return unknowns;

  // Unknown i*m + t is the coefficient of mons[t] in f_i. For each H the
  // condition is that sum_i a_i f_i vanishes after x_j := -sum_{i != j} a_i x_i,
  // one equation per monomial of the kept variables.
  std::vector<SparseRow> rows;
  for (const auto& h : a.hyperplanes()) {
    const int j = h.pivot();
    std::vector<int> kept_index(l, -1);
    for (int i = 0, c = 0; i < l; ++i)
      if (i != j) kept_index[i] = c++;
    Polynomial sub(l - 1);
    for (int i = 0; i < l; ++i)
      if (i != j && h[i] != 0) sub -= h[i] * Polynomial::variable(l - 1, kept_index[i]);
    std::vector<Polynomial> powers{Polynomial::constant(l - 1, 1)};
    for (int e = 1; e <= d; ++e) powers.push_back(powers.back() * sub);

    std::map<Monomial, SparseRow> by_monomial;
    for (int t = 0; t < m; ++t) {
      std::vector<int> rest(l - 1, 0);
      for (int i = 0; i < l; ++i)
        if (i != j) rest[kept_index[i]] = mons[t][i];
      Polynomial image = powers[mons[t][j]].times_term(Monomial(rest), Rational(1));
      for (int i = 0; i < l; ++i) {
        if (h[i] == 0) continue;
        for (const auto& term : image.terms())
          by_monomial[term.monomial].emplace_back(i * m + t, h[i] * term.coeff);
      }
    }
    for (auto& [mono, row] : by_monomial) {
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      rows.push_back(std::move(row));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& x, const SparseRow& y) { return x.size() < y.size(); });

  std::unordered_map<int, SparseRow> pivots;
  std::int64_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        Rational lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        break;
      }
      row = subtract(row, row.front().second, it->second);
    }
  }
  return unknowns - rank;
}

}  // namespace logder
