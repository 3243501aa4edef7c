#pragma once

// Small recursive-descent parser for polynomial expressions, generic over
// the algebra the expression is evaluated in.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
//
// Division is only by constants.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "spin/error.hpp"
#include "spin/scalar.hpp"

namespace spin::expr {

// Traits must provide:
//   Elem from_scalar(const Scalar&)
//   Elem identifier(std::string_view)           (throws InputError if unknown)
//   std::optional<Scalar> as_scalar(const Elem&)
//   Field field()
// and Elem must support +, -, *, unary -, pow(unsigned) and Elem * Scalar.
template <class Traits>
class Parser {
 public:
  using Elem = decltype(std::declval<Traits&>().from_scalar(std::declval<Scalar>()));

  Parser(Traits& traits, std::string_view text) : traits_(traits), text_(text) {}

  Elem parse() {
    Elem value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const auto c = static_cast<unsigned char>(text_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Elem expression() {
    Elem value = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        value = value + term();
      } else if (peek('-')) {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  Elem term() {
    Elem value = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        value = value * unary();
      } else if (peek('/')) {
        ++pos_;
        const Elem divisor = unary();
        const auto c = traits_.as_scalar(divisor);
        if (!c) fail("division by a non-constant");
        if (c->is_zero()) fail("division by zero");
        value = value * c->inverse();
      } else if (starts_primary()) {
        value = value * power();
      } else {
        return value;
      }
    }
  }

  Elem unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Elem power() {
    Elem base = primary();
    if (peek('^')) {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Elem primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const auto c = static_cast<unsigned char>(text_[pos_]);
    if (c == '(') {
      ++pos_;
      Elem inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return traits_.from_scalar(Scalar::parse(traits_.field(), text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      return traits_.identifier(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, static_cast<char>(c)) + "'");
  }

  Traits& traits_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Traits>
auto parse(Traits& traits, std::string_view text) {
  return Parser<Traits>{traits, text}.parse();
}

}  // namespace spin::expr
