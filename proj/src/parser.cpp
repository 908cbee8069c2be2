#include "polarclust/parser.hpp"

#include <cctype>

namespace polarclust {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  BivarPoly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    BivarPoly p = expr();
    skip();
    if (pos_ != s_.size()) {
      if (starts_operand()) throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_operand() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'i' || c == '(';
  }

  BivarPoly expr() {
    BivarPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BivarPoly term() {
    BivarPoly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (starts_operand()) {
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      } else {
        return acc;
      }
    }
  }

  BivarPoly unary() {
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

  BivarPoly power() {
    BivarPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected a non-negative integer exponent", pos_);
      mpz_class e = integer();
      if (e > 10000) throw ParseError("exponent too large", start);
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  BivarPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpq_class value(num);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t slash = pos_++;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError("expected a denominator after '/'", pos_);
        mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", slash);
        value = mpq_class(num, den);
        value.canonicalize();
      }
      return BivarPoly::constant(GaussianRational(value));
    }
    if (c == 'x' || c == 'y' || c == 'i') {
      ++pos_;
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        throw ParseError("unknown identifier", pos_ - 1);
      if (c == 'x') return BivarPoly::x();
      if (c == 'y') return BivarPoly::y();
      return BivarPoly::constant(GaussianRational::imaginary_unit());
    }
    if (c == '(') {
      ++pos_;
      BivarPoly inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown identifier", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_polynomial(const std::string& text) { return Parser(text).parse(); }

}  // namespace polarclust
