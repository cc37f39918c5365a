#include "chow/parser.hpp"

#include <cctype>
#include <limits>

#include "chow/error.hpp"

namespace chow {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTable::Ptr& table) : text_(text), table_(table) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    MultiPoly result = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool starts_base() {
    skip_ws();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'a' || c == 'b' ||
           c == 'g' || c == 't';
  }

  MultiPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (starts_base()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("exponent must be a nonnegative integer", at);
      std::uint64_t e = uint_literal();
      if (e > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", at);
      b = pow(b, static_cast<unsigned>(e));
    }
    return b;
  }

  std::uint64_t uint_literal() {
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned digit = static_cast<unsigned>(peek() - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw ParseError("integer literal too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected unsigned integer", start);
    return value;
  }

  std::string digit_string() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly base() {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digit_string(), 10);
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = Integer(digit_string(), 10);
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational r(num, den);
      r.canonicalize();
      return MultiPoly::constant(table_, r);
    }
    if (c == 't') {
      ++pos_;
      return MultiPoly::variable(table_, table_->parameter());
    }
    if (c == 'x') {
      ++pos_;
      bool chart = false;
      if (peek() == 'i') {
        ++pos_;
        chart = true;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
      std::uint64_t idx = uint_literal();
      if (chart) {
        if (idx < 1 || idx > table_->chart_count()) throw ParseError("unknown variable xi" + std::to_string(idx), at);
        return MultiPoly::variable(table_, table_->chart(static_cast<unsigned>(idx)));
      }
      if (idx == 0) return MultiPoly::constant(table_, Rational(1));
      if (idx > table_->dimension()) throw ParseError("unknown variable x" + std::to_string(idx), at);
      return MultiPoly::variable(table_, table_->coordinate(static_cast<unsigned>(idx)));
    }
    if (c == 'a' || c == 'b') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected variable index", pos_);
      std::uint64_t idx = uint_literal();
      if (idx > table_->dimension())
        throw ParseError(std::string("unknown variable ") + c + std::to_string(idx), at);
      unsigned j = static_cast<unsigned>(idx);
      return MultiPoly::variable(table_, c == 'a' ? table_->alpha(j) : table_->beta(j));
    }
    if (c == 'g') {
      ++pos_;
      if (peek() != '{') throw ParseError("expected '{' after g", pos_);
      ++pos_;
      skip_ws();
      std::uint64_t i = uint_literal();
      expect(',');
      skip_ws();
      std::uint64_t j = uint_literal();
      expect('}');
      if (i > table_->dimension() || j > table_->dimension())
        throw ParseError("unknown variable g{" + std::to_string(i) + "," + std::to_string(j) + "}", at);
      if (i == j) return MultiPoly(table_);
      if (i < j) return MultiPoly::variable(table_, table_->gamma(static_cast<unsigned>(i), static_cast<unsigned>(j)));
      return -MultiPoly::variable(table_, table_->gamma(static_cast<unsigned>(j), static_cast<unsigned>(i)));
    }
    if (at_end()) throw ParseError("unexpected end of expression", at);
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  std::string_view text_;
  const VarTable::Ptr& table_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarTable::Ptr& table) {
  if (!table) throw DomainError("parse_poly requires a variable table");
  return Parser(text, table).parse();
}

}  // namespace chow
