#include "jwtl/closed_forms.hpp"

#include <stdexcept>

namespace jwtl {

namespace {

QRat qi(long n) { return QRat::qint(n); }

void need(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word down(int from, int to) {
  Word w;
  for (int k = from; k >= to; --k) w.push_back(k);
  return w;
}

Word up(int from, int to) {
  Word w;
  for (int k = from; k <= to; ++k) w.push_back(k);
  return w;
}

std::string args(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::chain: return "chain";
    case Pattern::hook: return "hook";
    case Pattern::e01: return "e01";
    case Pattern::e013: return "e013";
    case Pattern::e120: return "e120";
    case Pattern::en310: return "en310";
    case Pattern::gn31: return "gn31";
    case Pattern::zerogn1: return "zerogn1";
    case Pattern::l021gn3: return "l021gn3";
    case Pattern::l120gn1: return "l120gn1";
  }
  return "?";
}

QRat closed_chain(int n, int j, int i) {
  need(1 <= i && i <= j && j <= n, "chain needs 1 <= i <= j <= n");
  if (i == 1 && j == 1) return qi(n) * qi(n + 1) / (qi(2 * n) * qi(2));
  if (i == 1) return qi(n) * qi(n + 1 - j) / qi(2 * n);
  return qi(n) * qi(2 * (i - 1)) * qi(n + 1 - j) / (qi(2 * n) * qi(i - 1));
}

QRat closed_hook(int n, int j, int i) {
  need(1 <= j && j <= n && 2 <= i && i <= n, "hook needs 1 <= j <= n and 2 <= i <= n");
  return qi(n) * qi(n + 1 - i) * qi(n + 1 - j) / (qi(2 * n) * qi(n + 1));
}

QRat closed_e01(int n) {
  need(n >= 1, "e01 needs n >= 1");
  return qi(n).pow(3) / (qi(2 * n) * qi(n + 1));
}

QRat closed_e013(int n) {
  need(n >= 3, "e013 needs n >= 3");
  QRat a = qi(n - 1).pow(3) * qi(n - 2) * qi(2).pow(2) / (qi(2 * n - 2) * qi(n + 1) * qi(n));
  QRat b = QRat(2) * qi(n) * qi(n - 1).pow(3) * qi(n - 2) * qi(2) / (qi(2 * n) * qi(2 * n - 2) * qi(n + 1));
  return a + b;
}

QRat closed_e120(int n) {
  need(n >= 2, "e120 needs n >= 2");
  return qi(n) * qi(n - 1) / (qi(2 * n) * qi(2));
}

QRat closed_en310(int n) {
  need(n >= 2, "en310 needs n >= 2");
  return qi(n - 1).pow(2) * qi(2) / (qi(2 * n) * qi(n + 1)) + qi(n - 1).pow(3) * qi(2).pow(2) / (qi(2 * n) * qi(2 * n - 2));
}

QRat closed_gn31(int n) {
  need(n >= 2, "gn31 needs n >= 2");
  return qi(n).pow(2) * qi(n - 1) * qi(3) / (qi(2 * n) * qi(2 * n - 2) * qi(2));
}

QRat closed_zerogn1(int n) {
  need(n >= 2, "zerogn1 needs n >= 2");
  return qi(n).pow(2) * qi(n - 1) / (qi(2 * n) * qi(2 * n - 2) * qi(2));
}

QRat closed_l021gn3(int n) {
  need(n >= 3, "l021gn3 needs n >= 3");
  return qi(n) * qi(n - 1) * qi(n - 2) * qi(3) / (qi(2 * n) * qi(2 * n - 2) * qi(2));
}

QRat closed_l120gn1(int n) {
  need(n >= 3, "l120gn1 needs n >= 3");
  return qi(n) * qi(n - 1) * qi(n - 2) / (qi(2 * n) * qi(2 * n - 2) * qi(2));
}

std::vector<ClosedFormCase> closed_form_cases(int n) {
  std::vector<ClosedFormCase> out;
  if (n < 1) return out;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i)
      out.push_back({Pattern::chain, "chain" + args(j, i), down(j, i), closed_chain(n, j, i)});
  for (int j = 1; j <= n; ++j)
    for (int i = 2; i <= n; ++i)
      out.push_back({Pattern::hook, "hook" + args(j, i), cat(cat(down(j, 1), {0}), up(2, i)), closed_hook(n, j, i)});
  out.push_back({Pattern::e01, "e01", {0, 1}, closed_e01(n)});
  if (n >= 2) {
    out.push_back({Pattern::e120, "e120", {1, 2, 0}, closed_e120(n)});
    out.push_back({Pattern::e120, "e120", {0, 2, 1}, closed_e120(n)});
    out.push_back({Pattern::en310, "en310", cat(down(n, 3), {1, 0}), closed_en310(n)});
    out.push_back({Pattern::gn31, "gn31", cat(down(n, 3), {1}), closed_gn31(n)});
    out.push_back({Pattern::gn31, "gn31", cat(down(n, 3), {0}), closed_gn31(n)});
    out.push_back({Pattern::zerogn1, "zerogn1", cat({0}, down(n, 1)), closed_zerogn1(n)});
    out.push_back({Pattern::zerogn1, "zerogn1", cat(cat({1}, down(n, 2)), {0}), closed_zerogn1(n)});
  }
  if (n >= 3) {
    out.push_back({Pattern::e013, "e013", {0, 1, 3}, closed_e013(n)});
    out.push_back({Pattern::l021gn3, "l021gn3", cat({0, 2, 1}, g_word(n, 3)), closed_l021gn3(n)});
    out.push_back({Pattern::l021gn3, "l021gn3", cat({1, 2, 0}, g_word(n, 3)), closed_l021gn3(n)});
    out.push_back({Pattern::l120gn1, "l120gn1", cat({1, 2, 0}, g_word(n, 1)), closed_l120gn1(n)});
    out.push_back({Pattern::l120gn1, "l120gn1", cat({0, 2, 1}, h_word(n, 0)), closed_l120gn1(n)});
  }
  return out;
}

std::optional<ClosedFormCase> closed_form_for(const DecoratedDiagram& d) {
  const int n = d.rank() - 1;
  for (auto& c : closed_form_cases(n)) {
    ScaledDiagram s = word_to_element(c.word, d.rank());
    if (s.diagram == d && s.scalar.is_one()) return c;
  }
  return std::nullopt;
}

}  // namespace jwtl
