// Rendering of rational functions as ratios of q-integers.
#include <map>
#include <mutex>
#include <sstream>

#include "jwtl/qlaurent.hpp"
#include "poly_detail.hpp"

namespace jwtl {

namespace {

using detail::Poly;

Poly cyclotomic_locked(int d, std::map<int, Poly>& cache) {
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  // q^d - 1 divided by every cyclotomic factor of a proper divisor
  Poly p(d + 1, BigInt(0));
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = *detail::poly_divide_exact(p, cyclotomic_locked(e, cache));
  return cache[d] = p;
}

Poly cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard lock(mu);
  return cyclotomic_locked(d, cache);
}

// Multiplicity of each cyclotomic factor Phi_d, d >= 3, in p.
// Phi_d has degree phi(d) >= d/5 for every d that can occur at the sizes we
// render, which bounds the search.
void cyclotomic_exponents(Poly p, int sign, std::map<int, int>& e) {
  int deg = static_cast<int>(p.size()) - 1;
  for (int d = 3; d <= 5 * deg + 6 && p.size() > 1; ++d) {
    Poly phi = cyclotomic(d);
    while (p.size() >= phi.size()) {
      auto q = detail::poly_divide_exact(p, phi);
      if (!q) break;
      p = std::move(*q);
      e[d] += sign;
    }
  }
}

// Writes a palindromic Laurent polynomial with single-parity exponents as a
// polynomial in [2]. Returns false when that is impossible.
bool in_qint2_basis(LaurentPoly p, std::map<int, BigInt>& out) {
  if (!p.is_palindromic()) return false;
  const LaurentPoly two = qint(2);
  while (!p.is_zero()) {
    int d = p.high();
    BigInt c = p.coeff(d);
    LaurentPoly x = 1;
    for (int k = 0; k < d; ++k) x *= two;
    p -= LaurentPoly(c) * x;
    out[d] = c;
    if (!p.is_zero() && p.high() >= d) return false;
  }
  return true;
}

struct Piece {
  std::string text;
  bool is_sum = false;  // needs parentheses when multiplied
  bool is_one = false;
  bool negative = false;
};

Piece render_poly(const LaurentPoly& p, bool latex) {
  Piece r;
  std::map<int, BigInt> basis;
  std::ostringstream os;
  if (p.is_monomial() && p.low() == 0) {
    BigInt c = p.coeff(0);
    r.negative = c < 0;
    if (r.negative) c = -c;
    r.is_one = c == 1;
    r.text = c.get_str();
    return r;
  }
  if (in_qint2_basis(p, basis)) {
    if (basis.size() == 1 && basis.rbegin()->second < 0) {
      r.negative = true;
      basis.begin()->second = -basis.begin()->second;
    }
    bool first = true;
    for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
      BigInt c = it->second;
      int d = it->first;
      if (c < 0) {
        os << "-";
        c = -c;
      } else if (!first) {
        os << "+";
      }
      first = false;
      if (d == 0 || c != 1) os << c.get_str();
      if (d > 0) os << "[2]";
      if (d > 1) os << (latex ? "^{" : "^") << d << (latex ? "}" : "");
    }
    r.text = os.str();
    r.is_sum = basis.size() > 1;
    return r;
  }
  r.text = p.to_string();
  if (latex) {
    std::string t;
    for (char ch : r.text)
      if (ch != ' ' && ch != '*') t += ch;
    r.text = t;
  }
  r.is_sum = true;
  return r;
}

std::string product_text(const std::map<int, int>& powers, const Piece& residual, bool latex,
                         bool& any_factor) {
  std::ostringstream os;
  any_factor = false;
  if (!residual.is_one && !residual.is_sum) {
    os << residual.text;
    any_factor = true;
  }
  for (auto it = powers.rbegin(); it != powers.rend(); ++it) {
    os << "[" << it->first << "]";
    if (it->second > 1) os << (latex ? "^{" : "^") << it->second << (latex ? "}" : "");
    any_factor = true;
  }
  if (residual.is_sum) {
    os << (any_factor ? "(" + residual.text + ")" : residual.text);
    any_factor = true;
  }
  return os.str();
}

std::string render(const QRat& x, bool latex) {
  if (x.is_zero()) return "0";
  std::map<int, int> e;
  cyclotomic_exponents(x.num().dense(), +1, e);
  cyclotomic_exponents(x.den().dense(), -1, e);
  // [k] carries Phi_j for every j | 2k with j >= 3; peel from the top down.
  std::map<int, int> a;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    int dd = it->first;
    if (dd % 2 || it->second == 0) continue;
    int k = dd / 2, m = it->second;
    a[k] += m;
    for (int j = 3; j <= dd; ++j)
      if (dd % j == 0) e[j] -= m;
  }
  QRat residual = x;
  std::map<int, int> up, down;
  for (auto [k, m] : a) {
    if (m == 0) continue;
    residual /= QRat::qint(k).pow(m);
    (m > 0 ? up[k] : down[k]) = m > 0 ? m : -m;
  }
  Piece rn = render_poly(residual.num(), latex), rd = render_poly(residual.den(), latex);
  bool has_num = false, has_den = false;
  std::string top = product_text(up, rn, latex, has_num);
  std::string bottom = product_text(down, rd, latex, has_den);
  if (!has_num) top = "1";
  std::string sign = rn.negative != rd.negative ? "-" : "";
  if (!has_den) return sign + top;
  if (latex) return sign + "\\frac{" + top + "}{" + bottom + "}";
  if (rn.is_sum && up.empty()) top = "(" + top + ")";
  bool single = down.size() + (rd.is_one ? 0 : 1) == 1 && !rd.is_sum;
  return sign + top + "/" + (single ? bottom : "(" + bottom + ")");
}

}  // namespace

std::string to_latex(const QRat& x) { return render(x, true); }
std::string to_qint_string(const QRat& x) { return render(x, false); }

}  // namespace jwtl
