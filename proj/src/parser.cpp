// Recursive-descent parser for boundary-set expressions.

#include <cctype>
#include <string>

#include "niemytzki/errors.hpp"
#include "niemytzki/set_expr.hpp"

namespace niemytzki {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  SetExpr parse_all() {
    SetExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

  Coords coords_only() {
    Coords c = coords();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  SetExpr expr() {
    std::vector<SetExpr> terms{term()};
    while (accept('|')) terms.push_back(term());
    return SetExpr::union_of(std::move(terms));
  }

  SetExpr term() {
    std::vector<SetExpr> factors{factor()};
    while (accept('&')) factors.push_back(factor());
    return SetExpr::inter(std::move(factors));
  }

  SetExpr factor() {
    if (accept('!')) return SetExpr::complement(factor());
    if (accept('(')) {
      SetExpr e = expr();
      expect(')');
      return e;
    }
    return primitive();
  }

  std::string_view identifier() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(begin, pos_ - begin);
  }

  SetExpr primitive() {
    skip_ws();
    const std::size_t begin = pos_;
    const std::string_view word = identifier();
    if (word.empty()) {
      if (pos_ == text_.size()) fail("unexpected end of input");
      fail("expected a set primitive, '!' or '('");
    }
    if (word == "empty") return SetExpr::empty();
    if (word == "all") return SetExpr::all();
    if (word == "rationals") return SetExpr::rationals();
    if (word == "lattice") return SetExpr::lattice();
    if (word == "cantor") return SetExpr::cantor();
    if (word == "bernstein") return SetExpr::bernstein();
    if (word == "point") {
      expect('(');
      Coords c = coords();
      expect(')');
      return SetExpr::point(std::move(c));
    }
    if (word == "finite") {
      expect('{');
      std::vector<Coords> pts{coords()};
      while (accept(';')) pts.push_back(coords());
      expect('}');
      return SetExpr::finite(std::move(pts));
    }
    if (word == "cball" || word == "oball") {
      expect('(');
      Coords c = coords();
      expect(';');
      skip_ws();
      const std::size_t at = pos_;
      Rat r = rat();
      if (r.sign() <= 0) fail_at(at, "ball radius must be positive");
      expect(')');
      return word == "cball" ? SetExpr::cball(std::move(c), std::move(r))
                             : SetExpr::oball(std::move(c), std::move(r));
    }
    fail_at(begin, "unknown primitive '" + std::string(word) + "'");
  }

  Coords coords() {
    skip_ws();
    const std::size_t begin = pos_;
    Coords c{rat()};
    while (accept(',')) c.push_back(rat());
    if (c.size() != arity_) {
      fail_at(begin, "expected " + std::to_string(arity_) + " coordinate(s), got " +
                         std::to_string(c.size()));
    }
    return c;
  }

  Rat rat() {
    skip_ws();
    const std::size_t begin = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > d;
    };
    if (!digits()) fail("expected a rational number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("expected a positive denominator");
    }
    try {
      return Rat::parse(text_.substr(begin, pos_ - begin));
    } catch (const ParseError& e) {
      fail_at(begin + e.offset(), "invalid rational");
    }
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

SetExpr parse_set(std::string_view text, std::size_t n) {
  if (n < 2) throw DimensionError("dimension must be at least 2");
  return Parser(text, n - 1).parse_all();
}

Coords parse_coords(std::string_view text, std::size_t arity) {
  return Parser(text, arity).coords_only();
}

}  // namespace niemytzki
