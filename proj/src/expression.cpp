#include "anth/expression.hpp"

#include <cctype>

namespace anth {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  SurdSum parse() {
    SurdSum v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SurdSum expr() {
    SurdSum v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  SurdSum term() {
    SurdSum v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        SurdSum d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  SurdSum unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  SurdSum primary() {
    skip();
    if (eat('(')) {
      SurdSum v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (text_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      SurdSum arg = expr();
      if (!eat(')')) fail("expected ')'");
      if (!arg.is_rational()) fail("sqrt argument must be rational");
      const Rational k = arg.rational_value();
      if (k <= 0) fail("sqrt argument must be positive");
      return SurdSum::term(1, k);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                : "unexpected end of input");
    return SurdSum(Rational(Integer(text_.substr(start, pos_ - start))));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurdSum parse_expression(const std::string& text) { return Parser(text).parse(); }

}  // namespace anth
