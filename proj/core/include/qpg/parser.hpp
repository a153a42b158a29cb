#pragma once

#include "qpg/ring.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Recursive-descent evaluator for the polynomial grammar
//   expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
//   factor := atom ('^' uint)?; atom := rational | ident | '(' expr ')';
//   rational := int ('/' uint)?
// generic over the value type, which needs +, -, * and a power routine.
template <class T>
class ExpressionParser {
 public:
  struct Hooks {
    std::function<T(const Rational&)> from_rational;
    std::function<T(const std::string&, std::size_t)> identifier;
    std::function<T(const T&, unsigned)> power;
  };

  ExpressionParser(std::string_view text, Hooks hooks) : text_(text), hooks_(std::move(hooks)) {}

  T parse() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    T v = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  T expr() {
    T v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = factor();
    while (peek('*')) {
      ++pos_;
      v = v * factor();
    }
    return v;
  }

  T factor() {
    T v = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected unsigned exponent", start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      v = hooks_.power(v, static_cast<unsigned>(std::stoul(digits)));
    }
    return v;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  T atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      bool neg = false;
      if (c == '-') {
        neg = true;
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected integer after '-'", pos_);
      }
      Integer num(read_digits());
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        std::string d = read_digits();
        if (d.empty()) throw ParseError("expected unsigned denominator", dstart);
        den = Integer(d);
        if (den == 0) throw ParseError("zero denominator", dstart);
      }
      Rational q(neg ? Integer(-num) : num, den);
      q.canonicalize();
      return hooks_.from_rational(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      return hooks_.identifier(name, start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  Hooks hooks_;
  std::size_t pos_ = 0;
};

// Parses and reduces modulo the ring ideal.
Polynomial parse_polynomial(std::string_view text, const CoordinateRing& ring);
// Same, without reduction.
Polynomial parse_polynomial_raw(std::string_view text, const CoordinateRing& ring);

}  // namespace qpg
