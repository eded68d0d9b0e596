// Recursive-descent parser for q-integer expressions.
#include <cctype>

#include "jwtl/qlaurent.hpp"

namespace jwtl {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QRat parse() {
    QRat v = expr();
    skip();
    if (p_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  const std::string& s_;
  size_t p_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad q-expression '" + s_ + "' at " + std::to_string(p_) + ": " + why);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  long integer() {
    skip();
    bool neg = false;
    if (p_ < s_.size() && s_[p_] == '-') {
      neg = true;
      ++p_;
    }
    size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected integer");
    long v = std::stol(s_.substr(start, p_ - start));
    return neg ? -v : v;
  }
  bool starts_factor() {
    char c = peek();
    return c == '[' || c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
  }

  QRat expr() {
    QRat v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }
  QRat term() {
    QRat v = unary();
    for (;;) {
      if (accept('*'))
        v *= unary();
      else if (accept('/'))
        v /= unary();
      else if (starts_factor())
        v *= power();
      else
        return v;
    }
  }
  QRat unary() {
    if (accept('-')) return -unary();
    return power();
  }
  QRat power() {
    QRat b = primary();
    if (accept('^')) return b.pow(static_cast<int>(integer()));
    return b;
  }
  QRat primary() {
    char c = peek();
    if (c == '(') {
      ++p_;
      QRat v = expr();
      if (!accept(')')) fail("expected )");
      return v;
    }
    if (c == '[') {
      ++p_;
      long n = integer();
      if (!accept(']')) fail("expected ]");
      return QRat::qint(n);
    }
    if (c == 'q') {
      ++p_;
      return QRat(LaurentPoly::monomial(1, 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QRat(integer());
    fail("unexpected character");
  }
};

}  // namespace

QRat parse_qexpr(const std::string& text) { return Parser(text).parse(); }

}  // namespace jwtl
