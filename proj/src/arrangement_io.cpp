#include "logder/arrangement_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "logder/error.hpp"

namespace logder {

namespace {

struct Token {
  enum Kind { ident, number, equals, lbracket, rbracket, comma, end } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t{Token::end, "", line_, column_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    if (c == '=') return single(Token::equals);
    if (c == '[') return single(Token::lbracket);
    if (c == ']') return single(Token::rbracket);
    if (c == ',') return single(Token::comma);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      t.kind = Token::number;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '/' || d == '-' || d == '+' || d == '.')) break;
        t.text += d;
        advance();
      }
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { tok_ = lex_.next(); }

  ArrangementFile run() {
    std::optional<int> dimension;
    std::optional<std::vector<RationalVector>> forms;
    std::vector<std::pair<int, int>> form_pos;
    std::optional<long> distinguished;
    Token dist_tok{};
    while (tok_.kind != Token::end) {
      Token name = expect(Token::ident, "field name");
      expect(Token::equals, "'='");
      auto duplicate = [&] { return ParseError("field '" + name.text + "' given twice", name.line, name.column); };
      if (name.text == "dimension") {
        if (dimension) throw duplicate();
        Token v = tok_;
        dimension = static_cast<int>(integer("dimension"));
        if (*dimension < 1 || *dimension > Monomial::kMaxVars)
          throw ParseError("dimension must be between 1 and 8", v.line, v.column);
      } else if (name.text == "hyperplanes") {
        if (forms) throw duplicate();
        forms.emplace();
        expect(Token::lbracket, "'['");
        while (tok_.kind != Token::rbracket) {
          form_pos.emplace_back(tok_.line, tok_.column);
          forms->push_back(row());
          if (tok_.kind == Token::comma) {
            advance();
            if (tok_.kind == Token::rbracket) throw ParseError("trailing comma", tok_.line, tok_.column);
          } else if (tok_.kind != Token::rbracket) {
            throw unexpected("',' or ']'");
          }
        }
        advance();
      } else if (name.text == "distinguished") {
        if (distinguished) throw duplicate();
        dist_tok = tok_;
        distinguished = integer("distinguished");
      } else {
        throw ParseError("unknown field '" + name.text + "'", name.line, name.column);
      }
    }
    if (!dimension) throw ParseError("missing field 'dimension'", tok_.line, tok_.column);
    if (!forms) throw ParseError("missing field 'hyperplanes'", tok_.line, tok_.column);

    Arrangement a(*dimension);
    std::vector<RationalVector> accepted;
    for (std::size_t k = 0; k < forms->size(); ++k) {
      auto [line, col] = form_pos[k];
      if (static_cast<int>((*forms)[k].size()) != *dimension)
        throw ParseError("hyperplane " + std::to_string(k) + " has " + std::to_string((*forms)[k].size()) +
                             " coefficients, expected " + std::to_string(*dimension),
                         line, col);
      accepted.push_back((*forms)[k]);
      try {
        a = Arrangement::make(*dimension, accepted);
      } catch (const ArrangementError& e) {
        throw ParseError(e.what(), line, col);
      }
    }
    ArrangementFile out{a, std::nullopt};
    if (distinguished) {
      if (*distinguished < 0 || static_cast<std::size_t>(*distinguished) >= a.size())
        throw ParseError("distinguished index out of range", dist_tok.line, dist_tok.column);
      out.distinguished = static_cast<std::size_t>(*distinguished);
    }
    return out;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  ParseError unexpected(const std::string& wanted) const {
    std::string got = tok_.kind == Token::end ? "end of input" : "'" + tok_.text + "'";
    return ParseError("expected " + wanted + ", found " + got, tok_.line, tok_.column);
  }

  Token expect(Token::Kind kind, const std::string& wanted) {
    if (tok_.kind != kind) throw unexpected(wanted);
    Token t = tok_;
    advance();
    return t;
  }

  long integer(const std::string& field) {
    Token t = expect(Token::number, "an integer for '" + field + "'");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.text.size() || t.text.find('/') != std::string::npos)
      throw ParseError("'" + t.text + "' is not an integer", t.line, t.column);
    return v;
  }

  RationalVector row() {
    expect(Token::lbracket, "'['");
    RationalVector v;
    while (tok_.kind != Token::rbracket) {
      Token t = expect(Token::number, "a rational number");
      try {
        v.push_back(parse_rational(t.text));
      } catch (const std::invalid_argument&) {
        throw ParseError("'" + t.text + "' is not a rational number (p or p/q)", t.line, t.column);
      }
      if (tok_.kind == Token::comma) {
        advance();
        if (tok_.kind == Token::rbracket) throw ParseError("trailing comma", tok_.line, tok_.column);
      } else if (tok_.kind != Token::rbracket) {
        throw unexpected("',' or ']'");
      }
    }
    advance();
    return v;
  }

  Lexer lex_;
  Token tok_;
};

}  // namespace

ArrangementFile parse_arrangement(std::string_view text) { return Parser(text).run(); }

ArrangementFile read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arrangement(ss.str());
}

std::string format_arrangement(const Arrangement& a, std::optional<std::size_t> distinguished) {
  std::ostringstream os;
  os << "dimension = " << a.dim() << "\n";
  os << "hyperplanes = [";
  for (std::size_t k = 0; k < a.size(); ++k) {
    os << (k ? ",\n  [" : "\n  [");
    for (int i = 0; i < a.dim(); ++i) os << (i ? ", " : "") << a[k][i].get_str();
    os << "]";
  }
  os << (a.empty() ? "]\n" : "\n]\n");
  if (distinguished) os << "distinguished = " << *distinguished << "\n";
  return os.str();
}

}  // namespace logder
