#include "eidsobs/poly/parse.hpp"

#include <cctype>

#include "eidsobs/error.hpp"

namespace eidsobs {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const VarContext* ctx, const ParamMap& params)
      : src_(src), ctx_(ctx), params_(params) {}

  Polynomial parse_polynomial() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

  std::int64_t parse_integer() {
    std::int64_t v = int_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Integer natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
      fail("expected an identifier");
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial constant(const Rational& c) const { return Polynomial::constant(*ctx_, c); }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (at_atom_start()) {
        fail("implicit multiplication is not allowed");
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      std::int64_t e = int_atom();
      if (e < 0) throw SyntaxError(at, "negative exponent");
      if (e > 0xFFFF) throw SyntaxError(at, "exponent too large");
      if (peek('^')) fail("chained exponents are ambiguous; use parentheses");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = natural();
      if (accept('/')) {
        std::size_t at = pos_;
        Integer den = natural();
        if (den == 0) throw SyntaxError(at, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return constant(q);
      }
      return constant(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name = identifier();
      std::size_t idx = ctx_->index_of(name);
      if (idx < ctx_->size()) return Polynomial::variable(*ctx_, idx);
      if (auto it = params_.find(name); it != params_.end()) return constant(Rational(it->second));
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable '" + name + "' at position " + std::to_string(at));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::int64_t int_expr() {
    std::int64_t acc = int_term();
    for (;;) {
      if (accept('+')) {
        acc += int_term();
      } else if (accept('-')) {
        acc -= int_term();
      } else {
        return acc;
      }
    }
  }

  std::int64_t int_term() {
    std::int64_t acc = int_unary();
    for (;;) {
      if (accept('*')) {
        acc *= int_unary();
      } else if (at_atom_start()) {
        fail("implicit multiplication is not allowed");
      } else {
        return acc;
      }
    }
  }

  std::int64_t int_unary() {
    if (accept('-')) return -int_unary();
    if (accept('+')) return int_unary();
    return int_atom();
  }

  std::int64_t int_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      std::int64_t v = int_expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = natural();
      if (!n.fits_slong_p()) fail("integer literal too large");
      return n.get_si();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name = identifier();
      if (auto it = params_.find(name); it != params_.end()) return it->second;
      throw Error(ErrorCode::UnknownVariable,
                  "unknown parameter '" + name + "' at position " + std::to_string(at));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const VarContext* ctx_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view src, const VarContext& ctx, const ParamMap& params) {
  return Parser(src, &ctx, params).parse_polynomial();
}

std::int64_t evaluate_int_expr(std::string_view src, const ParamMap& params) {
  return Parser(src, nullptr, params).parse_integer();
}

}  // namespace eidsobs
