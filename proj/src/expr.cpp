#include "fracpart/expr.hpp"

#include <cctype>
#include <string>

namespace fracpart {

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool integer_mode) : text_(text), integer_mode_(integer_mode) {}

  BigRational parse() {
    BigRational v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("cannot parse '" + std::string(text_) + "': " + why);
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

  BigRational expr() {
    BigRational v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  BigRational term() {
    BigRational v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const BigRational d = unary();
        if (sgn(d) == 0) fail("division by zero");
        if (integer_mode_ && v.get_num() % d.get_num() != 0)
          fail("inexact integer division " + to_string(v.get_num()) + " / " + to_string(d.get_num()));
        v /= d;
      } else {
        return v;
      }
    }
  }

  BigRational unary() {
    if (accept('-')) return BigRational(-unary());
    if (accept('+')) return unary();
    return power();
  }

  // Right-associative; the exponent binds tighter than unary minus on the left.
  BigRational power() {
    BigRational base = primary();
    if (!accept('^')) return base;
    const BigRational ex = unary();
    if (ex.get_den() != 1) fail("non-integer exponent");
    if (abs(ex.get_num()) > 1000000) fail("exponent too large");
    const long k = ex.get_num().get_si();
    if (k < 0) {
      if (integer_mode_) fail("negative exponent in integer expression");
      if (sgn(base) == 0) fail("zero to a negative power");
    }
    BigRational out(ipow(base.get_num(), static_cast<unsigned long>(k < 0 ? -k : k)),
                    ipow(base.get_den(), static_cast<unsigned long>(k < 0 ? -k : k)));
    out.canonicalize();
    return k < 0 ? BigRational(1 / out) : out;
  }

  BigRational primary() {
    if (accept('(')) {
      BigRational v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                                 : "unexpected end of input");
    return BigRational(BigInt(std::string(text_.substr(start, pos_ - start)), 10));
  }

  std::string_view text_;
  bool integer_mode_;
  std::size_t pos_ = 0;
};

}  // namespace

BigRational evaluate_rational(std::string_view text) { return Parser(text, false).parse(); }

BigInt evaluate_integer(std::string_view text) {
  const BigRational v = Parser(text, true).parse();
  if (v.get_den() != 1) throw PreconditionError("not an integer: '" + std::string(text) + "'");
  return v.get_num();
}

}  // namespace fracpart
