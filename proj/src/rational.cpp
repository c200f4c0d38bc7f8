#include "logder/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace logder {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_natural_literal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(Integer(n));
  std::string_view den = text.substr(slash + 1);
  if (!is_natural_literal(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace logder
