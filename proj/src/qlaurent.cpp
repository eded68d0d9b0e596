#include "jwtl/qlaurent.hpp"

#include "poly_detail.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace jwtl {

namespace {

// Dense integer polynomial, index = degree.
using Poly = std::vector<BigInt>;

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_all(Poly& p, const BigInt& c) {
  if (c == 1) return;
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

Poly primitive(Poly p) {
  strip(p);
  if (p.empty()) return p;
  BigInt c = content(p);
  if (p.back() < 0) c = -c;
  divide_all(p, c);
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Poly{};
  int da = degree(a), db = degree(b);
  if (da < db) return std::nullopt;
  Poly r = a, q(da - db + 1);
  const BigInt& lc = b.back();
  BigInt t;
  for (int k = da - db; k >= 0; --k) {
    BigInt& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_mul(t.get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
      r[k + j] -= t;
    }
  }
  for (int j = 0; j < db; ++j)
    if (r[j] != 0) return std::nullopt;
  return q;
}

BigInt eval(const Poly& p, const BigInt& x) {
  BigInt v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Balanced base-x digits of h.
Poly interpolate(BigInt h, const BigInt& x) {
  Poly f;
  BigInt half = x / 2, g;
  while (h != 0) {
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    f.push_back(g);
    h = (h - g) / x;
  }
  return f;
}

BigInt max_norm(const Poly& p) {
  BigInt m = 0;
  for (const auto& c : p) m = std::max<BigInt>(m, abs(c));
  return m;
}

// Heuristic gcd of primitive polynomials (Char, Geddes, Gonnet). Every
// candidate is confirmed by exact division, so a wrong guess cannot escape.
std::optional<Poly> heu_gcd(const Poly& f, const Poly& g) {
  BigInt fn = max_norm(f), gn = max_norm(g);
  BigInt b = 2 * std::min(fn, gn) + 29;
  BigInt x = std::min<BigInt>(b, 99 * sqrt(b));
  BigInt lo = 2 * std::min<BigInt>(fn / abs(f.back()), gn / abs(g.back())) + 2;
  x = std::max(x, lo);
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt ff = eval(f, x), gg = eval(g, x);
    if (ff != 0 && gg != 0) {
      BigInt h = gcd(ff, gg);
      Poly hp = primitive(interpolate(h, x));
      if (!hp.empty() && divide_exact(f, hp) && divide_exact(g, hp)) return hp;
      Poly cf = primitive(interpolate(ff / h, x));
      if (!cf.empty()) {
        if (auto q = divide_exact(f, cf)) {
          Poly cand = primitive(*q);
          if (divide_exact(g, cand)) return cand;
        }
      }
    }
    x = 73794 * x * sqrt(sqrt(x)) / 27011;
  }
  return std::nullopt;
}

Poly pseudo_rem(Poly a, const Poly& b) {
  int db = degree(b);
  const BigInt& lc = b.back();
  while (!a.empty() && degree(a) >= db) {
    BigInt lead = a.back();
    int shift = degree(a) - db;
    for (auto& c : a) c *= lc;
    for (int j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
    strip(a);
  }
  return a;
}

Poly prs_gcd(Poly a, Poly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive(a);
}

// Primitive gcd with positive leading coefficient, inputs nonzero.
Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly pa = primitive(a), pb = primitive(b);
  if (degree(pa) == 0 || degree(pb) == 0) return Poly{1};
  if (pa == pb) return pa;
  if (auto q = divide_exact(pa, pb)) return pb;
  if (auto q = divide_exact(pb, pa)) return pa;
  if (auto h = heu_gcd(pa, pb)) return *h;
  return prs_gcd(pa, pb);
}

}  // namespace

namespace detail {
Poly poly_mul(const Poly& a, const Poly& b) { return mul(a, b); }
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) { return divide_exact(a, b); }
}  // namespace detail

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exp) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.lo_ = exp;
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<BigInt> coeffs) {
  LaurentPoly p;
  p.lo_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k) {
    c_.erase(c_.begin(), c_.begin() + k);
    lo_ += static_cast<int>(k);
  }
  if (c_.empty()) lo_ = 0;
}

BigInt LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < lo_ || exp > high()) return 0;
  return c_[exp - lo_];
}

std::map<int, BigInt> LaurentPoly::coeffs() const {
  std::map<int, BigInt> m;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) m.emplace(lo_ + static_cast<int>(i), c_[i]);
  return m;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.lo_ += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_), hi = std::max(high(), o.high());
  if (lo < lo_) c_.insert(c_.begin(), lo_ - lo, BigInt(0));
  c_.resize(hi - lo + 1);
  lo_ = lo;
  for (size_t i = 0; i < o.c_.size(); ++i) c_[o.lo_ - lo + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_ = mul(a.c_, b.c_);
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  if (lo_ != -high()) return false;
  return std::equal(c_.begin(), c_.end(), c_.rbegin());
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= lo_; --e) {
    BigInt c = c_[e - lo_];
    if (c == 0) continue;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly qint(long n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  std::vector<BigInt> c(2 * n - 1, BigInt(0));
  for (long k = 0; k < n; ++k) c[2 * k] = 1;
  return LaurentPoly::from_dense(static_cast<int>(1 - n), std::move(c));
}

QRat::QRat(const LaurentPoly& p) : num_(p), den_(1) {}

QRat QRat::normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  QRat r;
  if (num.is_zero()) return r;
  int shift = num.low() - den.low();
  Poly n = num.dense(), d = den.dense();
  if (d.size() > 1 && n.size() > 1) {
    Poly g = poly_gcd(n, d);
    if (degree(g) > 0) {
      n = *divide_exact(n, g);
      d = *divide_exact(d, g);
    }
  }
  BigInt c = gcd(content(n), content(d));
  if (d.back() < 0) c = -c;
  divide_all(n, c);
  divide_all(d, c);
  r.num_ = LaurentPoly::from_dense(shift, std::move(n));
  r.den_ = LaurentPoly::from_dense(0, std::move(d));
  return r;
}

bool QRat::is_one() const {
  return num_.is_monomial() && num_.low() == 0 && num_.dense()[0] == 1 && den_.is_monomial() &&
         den_.dense()[0] == 1;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  if (o.den_ == LaurentPoly(1)) return *this = normalize(num_ + o.num_ * den_, den_);
  if (den_ == LaurentPoly(1)) return *this = normalize(num_ * o.den_ + o.num_, o.den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  return *this = normalize(num_ * o.den_, den_ * o.num_);
}

QRat QRat::pow(int e) const {
  if (e < 0) return QRat(1) / pow(-e);
  QRat r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

mpq_class QRat::eval_at_one() const {
  BigInt d = den_.eval_at_one();
  if (d == 0) throw PoleAtOne();
  mpq_class v(num_.eval_at_one(), d);
  v.canonicalize();
  return v;
}

std::string QRat::to_string() const {
  if (den_.is_monomial() && den_.dense()[0] == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRat qrat_arith(ArithOp op, const QRat& a, const QRat& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

}  // namespace jwtl
