#include "trigon/parse.hpp"

#include "trigon/error.hpp"

#include <cctype>

namespace trigon {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& names, const Field& field)
      : text_(text), names_(names), field_(field) {}

  MPoly parse() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = signed_term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly signed_term() {
    if (accept('-')) return -term();
    accept('+');
    return term();
  }

  MPoly term() {
    MPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  MPoly power() {
    MPoly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly primary() {
    skip_space();
    const std::size_t n = names_.size();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected denominator");
        den = integer();
        if (den == 0) error("zero denominator");
      }
      return MPoly::constant(n, field_.from(mpq_class(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < n; ++i)
        if (names_[i] == name) return MPoly::variable(n, i).in(field_);
      pos_ = start;
      error("unknown variable '" + std::string(name) + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  Field field_;
  std::size_t pos_ = 0;
};

} // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& names, const Field& field) {
  return Parser(text, names, field).parse();
}

Scalar parse_scalar(std::string_view text, const Field& field) {
  MPoly p = parse_poly(text, {}, field);
  if (!p.is_constant()) fail(ErrorKind::ParseError, "expected a number, got '" + std::string(text) + "'");
  return p.is_zero() ? field.zero() : p.leading_coeff();
}

} // namespace trigon
