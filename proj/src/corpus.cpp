#include <charconv>

#include "logder/arrangement.hpp"
#include "logder/error.hpp"

namespace logder {

namespace {

RationalVector unit_form(int l, std::initializer_list<std::pair<int, long>> entries) {
  RationalVector v(l, Rational(0));
  for (auto [i, c] : entries) v[i] = c;
  return v;
}

std::vector<RationalVector> type_a(int l) {
  std::vector<RationalVector> f;
  for (int i = 0; i < l; ++i) f.push_back(unit_form(l, {{i, 1}}));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) f.push_back(unit_form(l, {{i, 1}, {j, -1}}));
  return f;
}

std::vector<RationalVector> type_b(int l) {
  std::vector<RationalVector> f;
  for (int i = 0; i < l; ++i) f.push_back(unit_form(l, {{i, 1}}));
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      f.push_back(unit_form(l, {{i, 1}, {j, -1}}));
      f.push_back(unit_form(l, {{i, 1}, {j, 1}}));
    }
  return f;
}

std::vector<RationalVector> without(std::vector<RationalVector> f, const RationalVector& v) {
  std::erase(f, v);
  return f;
}

// B4 minus x1.
std::vector<RationalVector> deleted_b4() { return without(type_b(4), unit_form(4, {{0, 1}})); }

// The 11 forms of the worked example with exponents (1,3,3,4).
std::vector<RationalVector> example_45_deletion() {
  std::vector<RationalVector> f;
  f.push_back({1, 1, 1, 1});
  for (int i = 0; i < 4; ++i) f.push_back(unit_form(4, {{i, 1}}));
  for (int i = 1; i < 4; ++i) f.push_back(unit_form(4, {{0, 1}, {i, 1}}));
  for (int i = 1; i < 4; ++i) {
    RationalVector v = {1, 1, 1, 1};
    v[i] = 0;
    f.push_back(v);
  }
  return f;
}

// The 22 forms of the worked example with exponents (1,5,7,9).
std::vector<RationalVector> example_46_deletion() {
  std::vector<RationalVector> f;
  for (int i = 0; i < 4; ++i) f.push_back(unit_form(4, {{i, 1}}));
  for (int i = 0; i < 3; ++i) {
    for (long c : {1L, 2L}) {
      f.push_back(unit_form(4, {{i, 1}, {3, -c}}));
      f.push_back(unit_form(4, {{i, 1}, {3, c}}));
    }
  }
  for (int i = 1; i < 3; ++i) {
    f.push_back(unit_form(4, {{i, 1}, {3, -3}}));
    f.push_back(unit_form(4, {{i, 1}, {3, 3}}));
  }
  f.push_back(unit_form(4, {{2, 1}, {3, -4}}));
  f.push_back(unit_form(4, {{2, 1}, {3, 4}}));
  return f;
}

CorpusEntry with_last(std::string name, std::string description, int l, std::vector<RationalVector> forms,
                      RationalVector extra) {
  forms.push_back(std::move(extra));
  CorpusEntry e{std::move(name), std::move(description), Arrangement::make(l, forms), std::nullopt};
  e.distinguished = e.arrangement.size() - 1;
  return e;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

CorpusEntry corpus(std::string_view name) {
  const std::string n(name);
  if (name == "ex-4.2")
    return with_last(n, "A4 plus H: x1 - x2 + 2x3 - 2x4 (H distinguished)", 4, type_a(4), {1, -1, 2, -2});
  if (name == "ex-4.3")
    return with_last(n, "B4 minus x1, plus L: x1 + x2 + x3 (L distinguished)", 4, deleted_b4(), {1, 1, 1, 0});
  if (name == "ex-4.3-C") {
    auto forms = deleted_b4();
    forms.push_back({1, 1, 1, 0});
    return with_last(n, "B4 plus L: x1 + x2 + x3 (H: x1 distinguished)", 4, forms, {1, 0, 0, 0});
  }
  if (name == "ex-4.4") return with_last(n, "A4 plus H: x1 + x2 + x3 (H distinguished)", 4, type_a(4), {1, 1, 1, 0});
  if (name == "ex-4.5")
    return with_last(n, "free (1,3,3,4) arrangement plus H: x2 + x3 + x4 (H distinguished)", 4,
                     example_45_deletion(), {0, 1, 1, 1});
  if (name == "ex-4.6-H1")
    return with_last(n, "free (1,5,7,9) arrangement plus H1: x2 + x3 + 7x4 (H1 distinguished)", 4,
                     example_46_deletion(), {0, 1, 1, 7});
  if (name == "ex-4.6-H2")
    return with_last(n, "free (1,5,7,9) arrangement plus H2: x1 + x2 + x3 (H2 distinguished)", 4,
                     example_46_deletion(), {1, 1, 1, 0});

  int l = 0;
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B') && parse_int(name.substr(1), l)) {
    if (l < 1 || l > Monomial::kMaxVars) throw ArrangementError("rank out of range in " + n);
    if (name[0] == 'A') return {n, "braid-type arrangement x_i, x_i - x_j", Arrangement::make(l, type_a(l)), std::nullopt};
    // H: x1 is the hyperplane deleted in the B4 example.
    return {n, "type B arrangement x_i, x_i - x_j, x_i + x_j", Arrangement::make(l, type_b(l)), 0};
  }
  if (name.starts_with("boolean-") && parse_int(name.substr(8), l)) {
    if (l < 0 || l > Monomial::kMaxVars) throw ArrangementError("rank out of range in " + n);
    std::vector<RationalVector> f;
    for (int i = 0; i < l; ++i) f.push_back(unit_form(l, {{i, 1}}));
    return {n, "coordinate hyperplanes", Arrangement::make(l, f), std::nullopt};
  }
  if (name.starts_with("generic-")) {
    auto rest = name.substr(8);
    auto dash = rest.find('-');
    int count = 0;
    if (dash != std::string_view::npos && parse_int(rest.substr(0, dash), l) &&
        parse_int(rest.substr(dash + 1), count)) {
      if (l < 1 || l > Monomial::kMaxVars || count < 0 || count > 64)
        throw ArrangementError("parameters out of range in " + n);
      // Vandermonde rows (1, t, ..., t^{l-1}): any l of them are independent.
      std::vector<RationalVector> f;
      for (int t = 1; t <= count; ++t) {
        RationalVector v(l);
        Rational p = 1;
        for (int i = 0; i < l; ++i, p *= t) v[i] = p;
        f.push_back(v);
      }
      return {n, "forms in general position (moment curve)", Arrangement::make(l, f), std::nullopt};
    }
  }
  throw ArrangementError("unknown corpus name: " + n);
}

std::vector<std::string> corpus_names() {
  return {"A3",     "A4",     "B3",       "B4",     "boolean-3", "boolean-4", "generic-3-4", "generic-3-5",
          "ex-4.2", "ex-4.3", "ex-4.3-C", "ex-4.4", "ex-4.5",    "ex-4.6-H1", "ex-4.6-H2"};
}

}  // namespace logder
