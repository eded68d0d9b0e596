// Exact arithmetic in Z[q, q^-1] and its field of fractions.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace jwtl {

using BigInt = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct PoleAtOne : std::domain_error {
  PoleAtOne() : std::domain_error("pole at q=1") {}
};

// Integer Laurent polynomial. Stored densely from the lowest exponent; the
// first and last stored coefficients are nonzero, the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers promote to constants
  LaurentPoly(const BigInt& c);  // NOLINT

  static LaurentPoly monomial(const BigInt& c, int exp);
  static LaurentPoly from_dense(int low, std::vector<BigInt> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int exp) const;
  std::map<int, BigInt> coeffs() const;
  const std::vector<BigInt>& dense() const { return c_; }

  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  // Symmetric under q -> q^-1.
  bool is_palindromic() const;
  BigInt eval_at_one() const;
  std::string to_string() const;

 private:
  int lo_ = 0;
  std::vector<BigInt> c_;
  void trim();
};

// [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [-n] = -[n].
LaurentPoly qint(long n);

// Canonical reduced ratio num/den. The denominator has lowest exponent 0 and
// positive leading coefficient; the numerator keeps whatever power of q is
// left over. num's polynomial part and den are coprime with joint content 1.
class QRat {
 public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT
  QRat(const LaurentPoly& p);  // NOLINT

  static QRat normalize(const LaurentPoly& num, const LaurentPoly& den);
  static QRat qint(long n) { return QRat(jwtl::qint(n)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  QRat pow(int e) const;

  mpq_class eval_at_one() const;
  std::string to_string() const;

 private:
  LaurentPoly num_, den_;
};

enum class ArithOp { add, sub, mul, div };
QRat qrat_arith(ArithOp op, const QRat& a, const QRat& b);

// Parses expressions such as "[2]^3([2]^2+1)/([6][4])". Brackets denote
// q-integers, juxtaposition multiplies, the variable q is accepted as well.
QRat parse_qexpr(const std::string& text);

// Renders x as a product of q-integers times a residual factor written as a
// polynomial in [2] where possible, e.g. \frac{[2]^3([2]^2+1)}{[6][4]}.
std::string to_latex(const QRat& x);
// Plain-text form of the same decomposition: [2]^3([2]^2+1)/([6][4]).
std::string to_qint_string(const QRat& x);

}  // namespace jwtl
