#include "dp2/poly_parse.hpp"

#include <cctype>

namespace dp2::poly {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyDomain& domain) : text_(text), domain_(domain) {}

  FpPoly run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    FpPoly f = expr();
    skip_space();
    if (pos_ != text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
        throw ParseError("implicit multiplication is not allowed", pos_);
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    return f;
  }

 private:
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

  FpPoly expr() {
    FpPoly f = term();
    while (true) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        return f;
    }
  }

  FpPoly term() {
    FpPoly f = unary();
    while (accept('*')) f *= unary();
    return f;
  }

  FpPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FpPoly power() {
    FpPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a non-negative integer literal", at);
      unsigned long long e = integer_literal();
      if (e > 1000) throw ParseError("exponent too large", at);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') throw ParseError("chained exponent", pos_);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long long integer_literal() {
    unsigned long long v = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (~0ull) / 10 - 10) throw ParseError("integer literal too large", start);
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  FpPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FpPoly f = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long v = integer_literal();
      return FpPoly::constant(domain_.prime, static_cast<long long>(v % domain_.prime));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(at, pos_ - at);
      if (name.size() != 1 || domain_.variables.find(name[0]) == std::string::npos ||
          kVarNames.find(name[0]) == std::string_view::npos)
        throw ParseError("unknown variable '" + std::string(name) + "'", at);
      return FpPoly::variable(domain_.prime, static_cast<Var>(kVarNames.find(name[0])));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const PolyDomain& domain_;
  std::size_t pos_ = 0;
};

}  // namespace

FpPoly parse(std::string_view text, const PolyDomain& domain) {
  if (domain.prime == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (domain.prime < 3 || !is_prime(domain.prime))
    throw std::invalid_argument("characteristic must be an odd prime, got " + std::to_string(domain.prime));
  return Parser(text, domain).run();
}

}  // namespace dp2::poly
