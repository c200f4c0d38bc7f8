#include "logder/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "logder/error.hpp"
#include "logder/linalg.hpp"

namespace logder {

namespace {

bool in_span(const RrefResult& r, RationalVector v) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::size_t p = r.pivots[i];
    if (v[p] == 0) continue;
    Rational f = v[p];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * r.rows[i][c];
  }
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

std::string term(std::int64_t c, int power, bool first) {
  std::ostringstream os;
  std::int64_t mag = c < 0 ? -c : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (power == 0 || mag != 1) os << mag;
  if (power >= 1) os << 't';
  if (power >= 2) os << '^' << power;
  return os.str();
}

}  // namespace

FlatLattice FlatLattice::build(const Arrangement& a, std::size_t max_flats) {
  const std::size_t n = a.size();
  if (n > 64) throw LatticeTooLarge("intersection lattices are limited to 64 hyperplanes");
  FlatLattice L;
  L.dim_ = a.dim();
  L.n_ = n;
  L.flats_.push_back(Flat{0, 0, {}, 1});
  std::unordered_set<std::uint64_t> seen{0};
  std::size_t level_begin = 0, level_end = 1;
  for (int r = 0; level_begin < level_end; ++r) {
    std::vector<Flat> next;
    for (std::size_t x = level_begin; x < level_end; ++x) {
      for (std::size_t k = 0; k < n; ++k) {
        if (L.flats_[x].members >> k & 1u) continue;
        RationalMatrix rows = L.flats_[x].normals;
        rows.push_back(a[k].coeffs());
        RrefResult rr = rref(std::move(rows));
        std::uint64_t members = 0;
        for (std::size_t m = 0; m < n; ++m)
          if (in_span(rr, a[m].coeffs())) members |= std::uint64_t{1} << m;
        if (!seen.insert(members).second) continue;
        next.push_back(Flat{members, r + 1, std::move(rr.rows), 0});
        if (L.flats_.size() + next.size() > max_flats)
          throw LatticeTooLarge("intersection lattice exceeds " + std::to_string(max_flats) + " flats");
      }
    }
    std::sort(next.begin(), next.end(), [](const Flat& p, const Flat& q) { return p.normals < q.normals; });
    level_begin = L.flats_.size();
    for (auto& f : next) L.flats_.push_back(std::move(f));
    level_end = L.flats_.size();
  }
  for (std::size_t i = 1; i < L.flats_.size(); ++i) {
    std::int64_t sum = 0;
    const auto mi = L.flats_[i].members;
    for (std::size_t j = 0; j < i && L.flats_[j].rank < L.flats_[i].rank; ++j)
      if ((L.flats_[j].members & ~mi) == 0) sum += L.flats_[j].mobius;
    L.flats_[i].mobius = -sum;
  }
  return L;
}

std::vector<std::size_t> FlatLattice::rank_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(rank()) + 1, 0);
  for (const auto& f : flats_) ++out[f.rank];
  return out;
}

std::optional<std::size_t> FlatLattice::find(std::uint64_t members) const {
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].members == members) return i;
  return std::nullopt;
}

std::int64_t CharPoly::evaluate(std::int64_t t) const {
  std::int64_t v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
  return v;
}

std::optional<std::vector<std::int64_t>> CharPoly::integer_roots() const {
  std::vector<Integer> c;
  for (auto x : coeffs) c.emplace_back(static_cast<long>(x));
  std::vector<std::int64_t> roots;
  auto eval = [&](std::int64_t t) {
    Integer v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * static_cast<long>(t) + *it;
    return v;
  };
  auto divide_out = [&](std::int64_t r) {
    // synthetic division by (t - r)
    std::vector<Integer> q(c.size() - 1);
    Integer carry = 0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      carry = carry * static_cast<long>(r) + c[k + 1];
      q[k] = carry;
    }
    c = std::move(q);
    roots.push_back(r);
  };
  while (c.size() > 1) {
    if (c[0] == 0) {
      divide_out(0);
      continue;
    }
    Integer c0 = abs(c[0]);
    if (!c0.fits_slong_p()) return std::nullopt;
    long m = c0.get_si();
    bool found = false;
    for (long d = 1; d * d <= m && !found; ++d) {
      if (m % d) continue;
      for (long cand : {d, -d, m / d, -(m / d)}) {
        if (eval(cand) == 0) {
          divide_out(cand);
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string CharPoly::expanded() const {
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs[k] == 0) continue;
    s += term(coeffs[k], k, s.empty());
  }
  return s.empty() ? "0" : s;
}

std::string CharPoly::to_string() const {
  auto roots = integer_roots();
  if (!roots) return expanded();
  if (roots->empty()) return "1";
  std::map<std::int64_t, int> mult;
  for (auto r : *roots) ++mult[r];
  std::ostringstream os;
  for (auto [r, m] : mult) {
    if (r == 0) {
      os << 't';
    } else {
      os << "(t " << (r > 0 ? "- " : "+ ") << (r > 0 ? r : -r) << ')';
    }
    if (m > 1) os << '^' << m;
  }
  return os.str();
}

CharPoly CharPoly::from_roots(const std::vector<std::int64_t>& roots) {
  CharPoly p{{1}};
  for (auto r : roots) {
    std::vector<std::int64_t> next(p.coeffs.size() + 1, 0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= r * p.coeffs[k];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

CharPoly characteristic_polynomial(const FlatLattice& lattice) {
  CharPoly p{std::vector<std::int64_t>(static_cast<std::size_t>(lattice.dim()) + 1, 0)};
  for (const auto& f : lattice.flats()) p.coeffs[lattice.dim() - f.rank] += f.mobius;
  return p;
}

CharPoly characteristic_polynomial(const Arrangement& a) { return characteristic_polynomial(FlatLattice::build(a)); }

std::optional<CharPoly> charpoly_quotient(const CharPoly& dividend, const CharPoly& divisor) {
  if (divisor.coeffs.empty() || divisor.coeffs.back() == 0) throw DivisionByZero("division by the zero polynomial");
  if (dividend.degree() < divisor.degree()) {
    bool zero = std::all_of(dividend.coeffs.begin(), dividend.coeffs.end(), [](auto c) { return c == 0; });
    if (zero) return CharPoly{{0}};
    return std::nullopt;
  }
  std::vector<Rational> rem;
  for (auto c : dividend.coeffs) rem.emplace_back(static_cast<long>(c));
  const int dd = divisor.degree();
  std::vector<Rational> q(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rational lead(static_cast<long>(divisor.coeffs.back()));
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    Rational f = rem[k + dd] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= f * Rational(static_cast<long>(divisor.coeffs[i]));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  CharPoly out;
  for (const auto& c : q) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
    out.coeffs.push_back(c.get_num().get_si());
  }
  return out;
}

bool charpoly_divides(const CharPoly& divisor, const CharPoly& dividend) {
  return charpoly_quotient(dividend, divisor).has_value();
}

bool lattice_isomorphic(const FlatLattice& a, const FlatLattice& b, std::size_t max_flats) {
  if (a.size() > max_flats || b.size() > max_flats)
    throw LatticeTooLarge("lattice isomorphism is limited to " + std::to_string(max_flats) + " flats");
  if (a.num_hyperplanes() != b.num_hyperplanes() || a.rank_sizes() != b.rank_sizes()) return false;
  const std::size_t n = a.num_hyperplanes();
  const int top = a.rank();

  // Atom profile: how many flats of each rank contain the atom.
  auto profiles = [&](const FlatLattice& L) {
    std::vector<std::vector<std::size_t>> p(n, std::vector<std::size_t>(static_cast<std::size_t>(top) + 1, 0));
    for (const auto& f : L.flats())
      for (std::size_t k = 0; k < n; ++k)
        if (f.members >> k & 1u) ++p[k][f.rank];
    return p;
  };
  auto pa = profiles(a), pb = profiles(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::unordered_map<std::uint64_t, int> target;
  for (const auto& f : b.flats()) target.emplace(f.members, f.rank);
  // Flats of a with at least two atoms, keyed by their highest atom.
  std::vector<std::vector<const Flat*>> closing(n);
  for (const auto& f : a.flats()) {
    if (f.rank < 2) continue;
    std::size_t hi = 63 - static_cast<std::size_t>(__builtin_clzll(f.members));
    closing[hi].push_back(&f);
  }

  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || pb[c] != pa[k]) continue;
      sigma[k] = static_cast<int>(c);
      used[c] = true;
      bool ok = true;
      for (const Flat* f : closing[k]) {
        std::uint64_t img = 0;
        for (std::size_t m = 0; m <= k; ++m)
          if (f->members >> m & 1u) img |= std::uint64_t{1} << sigma[m];
        auto it = target.find(img);
        if (it == target.end() || it->second != f->rank) {
          ok = false;
          break;
        }
      }
      if (ok && extend(k + 1)) return true;
      used[c] = false;
      sigma[k] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace logder
