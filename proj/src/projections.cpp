#include "jwtl/projections.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace jwtl {

namespace {

QRat qi(long n) { return QRat::qint(n); }

template <class K>
class Memo {
 public:
  std::optional<QRat> get(const K& k) {
    std::lock_guard lock(mu_);
    auto it = m_.find(k);
    if (it == m_.end()) return std::nullopt;
    return it->second;
  }
  void put(const K& k, const QRat& v) {
    std::lock_guard lock(mu_);
    m_.insert_or_assign(k, v);
  }

 private:
  std::mutex mu_;
  std::map<K, QRat> m_;
};

Memo<Matching>& memo_a() {
  static Memo<Matching> m;
  return m;
}
Memo<DecoratedDiagram>& memo_even() {
  static Memo<DecoratedDiagram> m;
  return m;
}
Memo<DecoratedDiagram>& memo_odd() {
  static Memo<DecoratedDiagram> m;
  return m;
}
Memo<DecoratedDiagram>& memo_mixed() {
  static Memo<DecoratedDiagram> m;
  return m;
}

std::string diagram_label(const DecoratedDiagram& d) {
  return word_label(reduced_word(d)) + "@" + std::to_string(d.rank());
}

std::string matching_label(const Matching& m) { return m.dyck_word(); }

std::string gl(int n, int i) { return "g(" + std::to_string(n) + "," + std::to_string(i) + ")"; }
std::string hl(int n, int j) { return "h(" + std::to_string(n) + "," + std::to_string(j) + ")"; }

// sum of coefficients over the even decorations of m
QRat even_sum(const Matching& m) {
  QRat s;
  for (const auto& d : even_decorations(m)) s += coef_even_recursive(d);
  return s;
}

QRat odd_or_zero(const Matching& m) {
  if (m.is_identity()) return QRat(0);
  return coef_odd_recursive(DecoratedDiagram::odd(m));
}

QRat mixed_or_zero(const Matching& m) {
  if (m.is_identity()) return QRat(0);
  return coef_mixed_recursive(DecoratedDiagram::odd(m));
}

void require_odd(const DecoratedDiagram& d) {
  if (!d.is_odd()) throw std::invalid_argument("single-dot recursion needs a diagram with exactly one dot");
}

TLElement factor_element(int n) {
  const int r = n + 1;
  TLElement x(r);
  for (int i = 1; i <= n + 1; ++i) {
    ScaledDiagram s = word_to_element(g_word(n, i), r);
    x.add(s.diagram, coef_g(n, i) * s.scalar);
  }
  for (int j = 0; j <= n; ++j) {
    ScaledDiagram s = word_to_element(h_word(n, j), r);
    x.add(s.diagram, coef_h(n, j) * s.scalar);
  }
  return x;
}

TLElement q0() {
  TLElement x = TLElement::identity(2);
  x.add(generator(2, 0), QRat(1) / qi(2));
  return x;
}

}  // namespace

QRat coef_g(int n, int i) {
  if (n < 1 || i < 1 || i > n + 1) throw std::out_of_range("coef_g index out of range");
  if (i == 1) return qi(n) / qi(2 * n);
  return qi(n) * qi(2 * i - 2) / (qi(2 * n) * qi(i - 1));
}

QRat coef_h(int n, int j) {
  if (n < 1 || j < 0 || j > n + 1) throw std::out_of_range("coef_h index out of range");
  return qi(n) * qi(n + 1 - j) / (qi(2 * n) * qi(n + 1));
}

QRat sentinelli_a(int n) {
  if (n < 1) throw std::out_of_range("A_n needs n >= 1");
  if (n == 1) return QRat(1) / qi(2);
  return qi(n) * qi(2 * n - 2) / (qi(2 * n) * qi(n - 1));
}

QRat sentinelli_b(int n) {
  if (n < 1) throw std::out_of_range("B_n needs n >= 1");
  return qi(n) / (qi(2 * n) * qi(n + 1));
}

Word g_word(int n, int i) {
  Word w;
  for (int k = n; k >= i; --k) w.push_back(k);
  return w;
}

Word h_word(int n, int j) {
  Word w;
  for (int k = n; k >= 2; --k) w.push_back(k);
  w.push_back(0);
  for (int k = 1; k <= j; ++k) w.push_back(k);
  return w;
}

Word w_word(int n) { return h_word(n, n); }

int q_rank(int n) { return n == 0 ? 2 : n + 1; }

TLElement compute_P(int n) {
  if (n < 0) throw std::out_of_range("n must be nonnegative");
  TLElement p = TLElement::identity(1);
  for (int k = 1; k <= n; ++k) {
    const int r = k + 1;
    TLElement x(r);
    for (int i = 1; i <= k + 1; ++i) {
      ScaledDiagram s = word_to_element(g_word(k, i), r);
      x.add(s.diagram, qi(i) / qi(k + 1) * s.scalar);
    }
    p = extend_right(p) * x;
  }
  return p;
}

const TLElement& compute_Q(int n) {
  if (n < 0) throw std::out_of_range("n must be nonnegative");
  static std::mutex mu;
  static std::map<int, TLElement> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  TLElement q(2);
  if (n == 0)
    q = q0();
  else if (n == 1)
    q = compute_Q(0) * factor_element(1);
  else
    q = extend_right(compute_Q(n - 1)) * factor_element(n);
  std::lock_guard lock(mu);
  return memo.try_emplace(n, std::move(q)).first->second;
}

TLElement compute_Q_sentinelli(int n) {
  if (n < 0) throw std::out_of_range("n must be nonnegative");
  TLElement q = q0();
  for (int k = 1; k <= n; ++k) {
    const int r = k + 1;
    if (k >= 2) q = extend_right(q);
    TLElement ek = TLElement::from_word({k}, r), ew = TLElement::from_word(w_word(k), r);
    TLElement next = q;
    next += (q * ek * q) * sentinelli_a(k);
    next += (q * ew * q) * sentinelli_b(k);
    q = std::move(next);
  }
  return q;
}

QRat sum_of(const std::vector<Summand>& s) {
  QRat t;
  for (const auto& x : s) t += x.value;
  return t;
}

std::vector<Summand> typeA_recursion_terms(const Matching& m) {
  std::vector<Summand> out;
  const int n = m.rank() - 1;
  for (int i : innermost_positions(m)) {
    Matching sub = remove_cap(m, i);
    out.push_back({"[" + std::to_string(i) + "]/[" + std::to_string(n + 1) + "] x coefA(" + matching_label(sub) + ")",
                   qi(i) / qi(n + 1) * coef_A_recursive(sub)});
  }
  return out;
}

QRat coef_A_recursive(const Matching& m) {
  if (m.rank() == 1) return QRat(1);
  if (auto v = memo_a().get(m)) return *v;
  QRat v = sum_of(typeA_recursion_terms(m));
  memo_a().put(m, v);
  return v;
}

std::vector<Summand> even_recursion_terms(const DecoratedDiagram& d) {
  if (d.dot_count() % 2) throw std::invalid_argument("even recursion needs an even number of dots");
  std::vector<Summand> out;
  const int n = d.rank() - 1;
  InnermostCaps caps = innermost_caps(d);
  std::vector<int> all = caps.dotted;
  all.insert(all.end(), caps.open.begin(), caps.open.end());
  for (int i : all) {
    DecoratedDiagram sub = remove_cap(d, i);
    out.push_back({gl(n, i) + " x coef(" + diagram_label(sub) + ")", coef_g(n, i) * coef_even_recursive(sub)});
  }
  return out;
}

QRat coef_even_recursive(const DecoratedDiagram& d) {
  if (d.dot_count() % 2) throw std::invalid_argument("even recursion needs an even number of dots");
  if (d.rank() == 1) return QRat(1);
  if (auto v = memo_even().get(d)) return *v;
  QRat v = sum_of(even_recursion_terms(d));
  memo_even().put(d, v);
  return v;
}

std::vector<Summand> odd_recursion_terms(const DecoratedDiagram& d) {
  require_odd(d);
  std::vector<Summand> out;
  const int n = d.rank() - 1;
  const Matching& m = d.matching();
  for (int i : innermost_positions(m)) {
    Matching sub = remove_cap(m, i);
    QRat odd = odd_or_zero(sub);
    QRat h = coef_h(n, i);
    if (!h.is_zero())
      out.push_back({hl(n, i) + " x (even(" + matching_label(sub) + ") - [2] odd(" + matching_label(sub) + "))",
                     h * (even_sum(sub) - qi(2) * odd)});
    if (!odd.is_zero())
      out.push_back({std::string(i == 1 ? "2 " : "") + gl(n, i) + " x odd(" + matching_label(sub) + ")",
                     QRat(i == 1 ? 2 : 1) * coef_g(n, i) * odd});
  }
  return out;
}

QRat coef_odd_recursive(const DecoratedDiagram& d) {
  require_odd(d);
  if (auto v = memo_odd().get(d)) return *v;
  QRat v = sum_of(odd_recursion_terms(d));
  memo_odd().put(d, v);
  return v;
}

std::vector<Summand> mixed_recursion_terms(const DecoratedDiagram& d) {
  require_odd(d);
  std::vector<Summand> out;
  const int n = d.rank() - 1;
  const Matching& m = d.matching();
  for (int i : innermost_positions(m)) {
    Matching sub = remove_cap(m, i);
    QRat h = coef_h(n, i);
    if (!h.is_zero())
      out.push_back({hl(n, i) + " x coefA(" + matching_label(sub) + ")", h * coef_A_recursive(sub)});
    QRat mixed = mixed_or_zero(sub);
    if (!mixed.is_zero())
      out.push_back({std::string(i == 1 ? "2 " : "") + gl(n, i) + " x mixed(" + matching_label(sub) + ")",
                     QRat(i == 1 ? 2 : 1) * coef_g(n, i) * mixed});
  }
  return out;
}

QRat coef_mixed_recursive(const DecoratedDiagram& d) {
  require_odd(d);
  if (auto v = memo_mixed().get(d)) return *v;
  QRat v = sum_of(mixed_recursion_terms(d));
  memo_mixed().put(d, v);
  return v;
}

QRat typeA_combination(const Matching& m) {
  if (m.is_identity()) return QRat(1);
  return even_sum(m) - qi(2) * odd_or_zero(m);
}

std::vector<Summand> product_terms(int n, const DecoratedDiagram& d) {
  std::vector<Summand> out;
  if (n == 0) {
    QRat c = compute_Q(0).coef(d);
    if (!c.is_zero()) out.push_back({"Q0", c});
    return out;
  }
  const int r = n + 1;
  if (d.rank() != r) return out;
  TLElement base = n == 1 ? compute_Q(0) : extend_right(compute_Q(n - 1));
  std::vector<std::pair<std::string, std::pair<DecoratedDiagram, QRat>>> factors;
  for (int i = 1; i <= n + 1; ++i) {
    ScaledDiagram s = word_to_element(g_word(n, i), r);
    factors.push_back({gl(n, i), {s.diagram, coef_g(n, i) * s.scalar}});
  }
  for (int j = 0; j <= n; ++j) {
    ScaledDiagram s = word_to_element(h_word(n, j), r);
    factors.push_back({hl(n, j), {s.diagram, coef_h(n, j) * s.scalar}});
  }
  for (const auto& [bd, bc] : base.terms()) {
    for (const auto& [name, f] : factors) {
      RawProduct p = compose_raw(bd, f.first);
      if (p.diagram != d) continue;
      out.push_back({"coef(" + diagram_label(bd) + ") x " + name + (p.loops ? " x (-[2])^" + std::to_string(p.loops) : ""),
                     bc * f.second * minus_two_pow(p.loops)});
    }
  }
  return out;
}

std::vector<std::pair<DecoratedDiagram, Word>> basis_words(int rank) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<DecoratedDiagram, Word>>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(rank); it != memo.end()) return it->second;
  }
  std::map<DecoratedDiagram, Word> seen{{DecoratedDiagram::identity(rank), {}}};
  std::vector<DecoratedDiagram> frontier{DecoratedDiagram::identity(rank)};
  while (!frontier.empty()) {
    std::vector<DecoratedDiagram> next;
    for (const auto& d : frontier) {
      const Word base = seen.at(d);
      for (int g = 0; g < rank; ++g) {
        if (g <= 1 && rank < 2) continue;
        RawProduct p = compose_raw(d, generator(rank, g));
        if (p.loops != 0 || seen.count(p.diagram)) continue;
        Word w = base;
        w.push_back(g);
        seen.emplace(p.diagram, std::move(w));
        next.push_back(p.diagram);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<DecoratedDiagram, Word>> out(seen.begin(), seen.end());
  std::lock_guard lock(mu);
  return memo.try_emplace(rank, std::move(out)).first->second;
}

Word reduced_word(const DecoratedDiagram& d) {
  auto words = basis_words(d.rank());
  auto it = std::lower_bound(words.begin(), words.end(), d,
                             [](const auto& e, const DecoratedDiagram& k) { return e.first < k; });
  if (it == words.end() || it->first != d) throw std::invalid_argument("diagram has no reduced word");
  return it->second;
}

}  // namespace jwtl
