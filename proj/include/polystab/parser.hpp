#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "polystab/symfun.hpp"

namespace polystab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace parser_detail {

// Recursive descent over:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | macro | '(' expr ')'
//   var    := 'x' uint        macro := ('e'|'h'|'p'|'m'|'s') shape
//   shape  := uint | '{' uint (',' uint)* '}'
class Parser {
 public:
  Parser(const std::string& src, int nvars, const FieldSpec& field)
      : src_(src), nvars_(nvars), field_(field) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Polynomial t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c)) || is_macro_char(c)) {
        acc = acc * factor();  // juxtaposition
      } else if (c == '/') {
        fail("division in expressions is not supported");
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      b = b.pow(uint_lit());
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_ws();
      expect(')');
      return p;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t at = pos_;
      int idx = uint_lit();
      if (idx < 1 || idx > nvars_)
        throw ParseError("unknown variable x" + std::to_string(idx) + " (nvars=" + std::to_string(nvars_) + ")", at);
      return Polynomial::variable(nvars_, idx - 1, Scalar::zero(field_));
    }
    if (is_macro_char(c)) {
      ++pos_;
      Partition shape = shape_lit();
      return basis_poly(basis_kind_from_char(c), shape, nvars_, field_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = uint_lit();
      long den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = uint_lit();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      return Polynomial::constant(nvars_, Scalar(field_, mpq_class(num, den)));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  Partition shape_lit() {
    skip_ws();
    if (peek() == '{') {
      ++pos_;
      std::vector<int> parts;
      for (;;) {
        skip_ws();
        parts.push_back(uint_lit());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
      std::size_t at = pos_;
      try {
        return Partition(parts);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      int k = uint_lit();
      if (k < 1) fail("shape part must be >= 1");
      return Partition({k});
    }
    fail("expected macro shape (uint or {list})");
  }

  int uint_lit() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected unsigned integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000) fail("integer literal too large");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  static bool is_macro_char(char c) { return c == 'e' || c == 'h' || c == 'p' || c == 'm' || c == 's'; }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  const std::string& src_;
  std::size_t pos_ = 0;
  int nvars_;
  FieldSpec field_;
};

}  // namespace parser_detail

inline Polynomial parse(const std::string& expr, int nvars, const FieldSpec& field) {
  return parser_detail::Parser(expr, nvars, field).run();
}

}  // namespace polystab
