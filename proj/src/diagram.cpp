#include "jwtl/diagram.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

namespace jwtl {

Matching::Matching(int rank, std::vector<Chord> pairs) : rank_(rank), pairs_(std::move(pairs)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  const int n = 2 * rank;
  if (static_cast<int>(pairs_.size()) != rank) throw std::invalid_argument("matching is not perfect");
  partner_.assign(n + 1, 0);
  for (auto& c : pairs_) {
    if (c.a > c.b) std::swap(c.a, c.b);
    if (c.a < 1 || c.b > n || c.a == c.b || partner_[c.a] || partner_[c.b])
      throw std::invalid_argument("matching is not perfect");
    partner_[c.a] = c.b;
    partner_[c.b] = c.a;
  }
  std::sort(pairs_.begin(), pairs_.end());
  outer_.assign(n + 1, 0);
  std::vector<int> stack;
  for (int p = 1; p <= n; ++p) {
    if (partner_[p] > p) {
      if (stack.empty()) outer_[p] = 1;
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != partner_[p]) throw std::invalid_argument("matching crosses");
      stack.pop_back();
    }
  }
}

Matching Matching::identity(int rank) {
  std::vector<Chord> pairs;
  for (int j = 1; j <= rank; ++j) pairs.push_back({j, 2 * rank + 1 - j});
  return Matching(rank, std::move(pairs));
}

Matching Matching::from_dyck(const std::string& word) {
  if (word.empty() || word.size() % 2) throw std::invalid_argument("Dyck word must have positive even length");
  std::vector<int> stack;
  std::vector<Chord> pairs;
  for (size_t i = 0; i < word.size(); ++i) {
    int p = static_cast<int>(i) + 1;
    if (word[i] == 'U') {
      stack.push_back(p);
    } else if (word[i] == 'D') {
      if (stack.empty()) throw std::invalid_argument("not a Dyck word: " + word);
      pairs.push_back({stack.back(), p});
      stack.pop_back();
    } else {
      throw std::invalid_argument("Dyck word letters must be U or D");
    }
  }
  if (!stack.empty()) throw std::invalid_argument("not a Dyck word: " + word);
  return Matching(static_cast<int>(word.size() / 2), std::move(pairs));
}

Chord Matching::chord_of(int p) const {
  int q = partner_[p];
  return p < q ? Chord{p, q} : Chord{q, p};
}

bool Matching::is_identity() const {
  for (int j = 1; j <= rank_; ++j)
    if (partner_[j] != 2 * rank_ + 1 - j) return false;
  return true;
}

bool Matching::is_outer(Chord c) const { return partner_[c.a] == c.b && outer_[c.a]; }

std::vector<Chord> Matching::outer_chords() const {
  std::vector<Chord> out;
  for (const auto& c : pairs_)
    if (outer_[c.a]) out.push_back(c);
  return out;
}

std::string Matching::dyck_word() const {
  std::string w(2 * rank_, 'D');
  for (const auto& c : pairs_) w[c.a - 1] = 'U';
  return w;
}

DecoratedDiagram::DecoratedDiagram(Matching m, std::vector<Chord> dots) : m_(std::move(m)), dots_(std::move(dots)) {
  for (auto& c : dots_) {
    if (c.a > c.b) std::swap(c.a, c.b);
    if (c.a < 1 || c.b > 2 * m_.rank() || m_.partner(c.a) != c.b) throw NonCanonical("dot on a non-chord");
  }
  std::sort(dots_.begin(), dots_.end());
  if (std::adjacent_find(dots_.begin(), dots_.end()) != dots_.end()) throw NonCanonical("two dots on one chord");
  if (dots_.empty()) return;
  if (m_.is_identity()) throw NonCanonical("identity diagram carries dots");
  if (dots_.size() == 1) {
    if (dots_[0].a != 1) throw NonCanonical("single dot away from bottom point 1");
    return;
  }
  if (dots_.size() % 2) throw NonCanonical("odd number of dots greater than one");
  for (const auto& c : dots_)
    if (!m_.is_outer(c)) throw NonCanonical("dot on a nested chord");
}

DecoratedDiagram DecoratedDiagram::identity(int rank) { return DecoratedDiagram(Matching::identity(rank), {}); }

DecoratedDiagram DecoratedDiagram::odd(Matching m) {
  Chord c = m.chord_of(1);
  return DecoratedDiagram(std::move(m), {c});
}

bool DecoratedDiagram::is_dotted(Chord c) const { return std::binary_search(dots_.begin(), dots_.end(), c); }

std::string DecoratedDiagram::to_string() const {
  std::ostringstream os;
  os << "rank " << rank() << " {";
  bool first = true;
  for (const auto& c : m_.pairs()) {
    os << (first ? "" : " ") << "(" << c.a << "," << c.b << ")" << (is_dotted(c) ? "*" : "");
    first = false;
  }
  os << "}";
  return os.str();
}

const QRat& minus_two_pow(int k) {
  static std::mutex mu;
  static std::deque<QRat> cache{QRat(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * -QRat::qint(2));
  return cache[k];
}

DecoratedDiagram generator(int rank, int i) {
  if (i < 0 || i > rank - 1 || (i <= 1 && rank < 2)) throw std::out_of_range("generator index out of range");
  int k = i == 0 ? 1 : i;
  std::vector<Chord> pairs{{k, k + 1}, {2 * rank - k, 2 * rank + 1 - k}};
  for (int j = 1; j <= rank; ++j)
    if (j != k && j != k + 1) pairs.push_back({j, 2 * rank + 1 - j});
  Matching m(rank, std::move(pairs));
  if (i == 0) return DecoratedDiagram(std::move(m), {{1, 2}, {2 * rank - 1, 2 * rank}});
  return DecoratedDiagram(std::move(m), {});
}

RawProduct compose_raw(const DecoratedDiagram& top, const DecoratedDiagram& bottom) {
  const int r = top.rank();
  if (bottom.rank() != r) throw std::invalid_argument("rank mismatch in compose");
  const int n = 2 * r;
  // side 0 = top factor, side 1 = bottom factor
  const Matching* m[2] = {&top.matching(), &bottom.matching()};
  std::vector<char> dot[2] = {std::vector<char>(n + 1, 0), std::vector<char>(n + 1, 0)};
  std::vector<char> seen[2] = {std::vector<char>(n + 1, 0), std::vector<char>(n + 1, 0)};
  int markers = 0;
  const DecoratedDiagram* f[2] = {&top, &bottom};
  for (int s = 0; s < 2; ++s) {
    if (f[s]->is_odd()) {
      ++markers;
      continue;
    }
    for (const auto& c : f[s]->dots()) dot[s][c.a] = dot[s][c.b] = 1;
  }
  // Top factor's bottom point k is glued to the bottom factor's top label n+1-k.
  std::vector<Chord> pairs, dots;
  pairs.reserve(r);
  for (int start = 1; start <= n; ++start) {
    int s = start <= r ? 1 : 0;
    if (seen[s][start]) continue;
    int p = start, parity = 0;
    for (;;) {
      int q = m[s]->partner(p);
      parity ^= dot[s][p];
      seen[s][p] = seen[s][q] = 1;
      if ((s == 1 && q <= r) || (s == 0 && q > r)) {
        Chord c = start < q ? Chord{start, q} : Chord{q, start};
        pairs.push_back(c);
        if (parity) dots.push_back(c);
        break;
      }
      s = 1 - s;
      p = n + 1 - q;
    }
  }
  int loops = 0;
  for (int k = 1; k <= r; ++k) {
    if (seen[0][k]) continue;
    int s = 0, p = k, parity = 0;
    do {
      int q = m[s]->partner(p);
      parity ^= dot[s][p];
      seen[s][p] = seen[s][q] = 1;
      s = 1 - s;
      p = n + 1 - q;
    } while (!(s == 0 && p == k));
    if (parity)
      ++markers;
    else
      ++loops;
  }
  Matching out(r, std::move(pairs));
  if (markers > 0) {
    if (out.is_identity()) throw NonCanonical("single dot on the identity");
    return {DecoratedDiagram::odd(std::move(out)), loops + markers - 1};
  }
  return {DecoratedDiagram(std::move(out), std::move(dots)), loops};
}

ScaledDiagram compose(const DecoratedDiagram& top, const DecoratedDiagram& bottom) {
  RawProduct p = compose_raw(top, bottom);
  return {minus_two_pow(p.loops), std::move(p.diagram)};
}

Matching extend_right(const Matching& m) {
  const int r = m.rank();
  auto lift = [r](int p) { return p <= r ? p : p + 2; };
  std::vector<Chord> pairs;
  for (const auto& c : m.pairs()) pairs.push_back({lift(c.a), lift(c.b)});
  pairs.push_back({r + 1, r + 2});
  return Matching(r + 1, std::move(pairs));
}

DecoratedDiagram extend_right(const DecoratedDiagram& d) {
  const int r = d.rank();
  auto lift = [r](int p) { return p <= r ? p : p + 2; };
  std::vector<Chord> dots;
  for (const auto& c : d.dots()) dots.push_back({lift(c.a), lift(c.b)});
  return DecoratedDiagram(extend_right(d.matching()), std::move(dots));
}

RawProduct word_to_raw(const Word& word, int rank) {
  RawProduct acc{DecoratedDiagram::identity(rank), 0};
  for (int s : word) {
    RawProduct p = compose_raw(acc.diagram, generator(rank, s));
    acc.diagram = std::move(p.diagram);
    acc.loops += p.loops;
  }
  return acc;
}

ScaledDiagram word_to_element(const Word& word, int rank) {
  RawProduct p = word_to_raw(word, rank);
  return {minus_two_pow(p.loops), std::move(p.diagram)};
}

Word parse_word(const std::string& text) {
  Word w;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad word: " + text);
    w.push_back(v);
  }
  return w;
}

std::string word_to_string(const Word& w, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? sep : "") + std::to_string(w[i]);
  return s;
}

std::string word_label(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int i : w) s += "E" + std::to_string(i);
  return s;
}

Word theta(Word w) {
  for (int& s : w)
    if (s <= 1) s = 1 - s;
  return w;
}

ChordView to_chord(const DecoratedDiagram& d) { return {d.matching().dyck_word(), d.dots()}; }

DecoratedDiagram from_chord(const ChordView& v) { return DecoratedDiagram(Matching::from_dyck(v.path), v.dotted); }

std::vector<int> innermost_positions(const Matching& m) {
  std::vector<int> out;
  for (int i = 1; i <= m.rank(); ++i)
    if (m.partner(i) == i + 1) out.push_back(i);
  return out;
}

InnermostCaps innermost_caps(const DecoratedDiagram& d) {
  InnermostCaps caps;
  for (int i : innermost_positions(d.matching())) {
    bool dotted = d.is_dotted({i, i + 1});
    if (!dotted)
      caps.open.push_back(i);
    else if (i == 1)
      caps.dotted.push_back(i);
  }
  return caps;
}

Matching remove_cap(const Matching& m, int i) {
  if (i < 1 || i > m.rank() || m.partner(i) != i + 1) throw std::invalid_argument("no inner-most cap at position");
  if (m.rank() < 2) throw std::invalid_argument("cannot remove the last strand");
  auto down = [i](int p) { return p < i ? p : p - 2; };
  std::vector<Chord> pairs;
  for (const auto& c : m.pairs())
    if (c.a != i) pairs.push_back({down(c.a), down(c.b)});
  return Matching(m.rank() - 1, std::move(pairs));
}

DecoratedDiagram remove_cap(const DecoratedDiagram& d, int i) {
  InnermostCaps caps = innermost_caps(d);
  bool open = std::find(caps.open.begin(), caps.open.end(), i) != caps.open.end();
  bool dotted = std::find(caps.dotted.begin(), caps.dotted.end(), i) != caps.dotted.end();
  if (!open && !dotted) throw std::invalid_argument("position is not a removable inner-most cap");
  if (d.is_odd()) throw std::invalid_argument("remove_cap expects an even diagram");
  Matching m = remove_cap(d.matching(), i);
  auto down = [i](int p) { return p < i ? p : p - 2; };
  std::vector<Chord> dots;
  for (const auto& c : d.dots())
    if (c.a != i) dots.push_back({down(c.a), down(c.b)});
  if (dotted) {
    Chord c = m.chord_of(1);
    auto it = std::find(dots.begin(), dots.end(), c);
    if (it != dots.end())
      dots.erase(it);
    else
      dots.push_back(c);
  }
  return DecoratedDiagram(std::move(m), std::move(dots));
}

DecoratedDiagram transpose(const DecoratedDiagram& d) {
  const int n = 2 * d.rank();
  auto flip = [n](Chord c) { return Chord{n + 1 - c.b, n + 1 - c.a}; };
  std::vector<Chord> pairs;
  for (const auto& c : d.matching().pairs()) pairs.push_back(flip(c));
  Matching m(d.rank(), std::move(pairs));
  if (d.is_odd()) return DecoratedDiagram::odd(std::move(m));
  std::vector<Chord> dots;
  for (const auto& c : d.dots()) dots.push_back(flip(c));
  return DecoratedDiagram(std::move(m), std::move(dots));
}

Matching forgetful(const DecoratedDiagram& d) { return d.matching(); }

std::vector<Matching> enumerate_matchings(int rank) {
  std::vector<Matching> out;
  std::string w;
  auto rec = [&](auto&& self, int up, int down) -> void {
    if (up == rank && down == rank) {
      out.push_back(Matching::from_dyck(w));
      return;
    }
    if (up < rank) {
      w.push_back('U');
      self(self, up + 1, down);
      w.pop_back();
    }
    if (down < up) {
      w.push_back('D');
      self(self, up, down + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecoratedDiagram> even_decorations(const Matching& m) {
  std::vector<Chord> outer = m.outer_chords();
  std::vector<DecoratedDiagram> out;
  const unsigned k = static_cast<unsigned>(outer.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    std::vector<Chord> dots;
    for (unsigned j = 0; j < k; ++j)
      if (mask >> j & 1) dots.push_back(outer[j]);
    out.emplace_back(m, std::move(dots));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecoratedDiagram> enumerate_basis(int rank, Parity parity) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<DecoratedDiagram> out;
  for (const auto& m : enumerate_matchings(rank)) {
    if (parity != Parity::odd)
      for (auto& d : even_decorations(m)) out.push_back(std::move(d));
    if (parity != Parity::even && !m.is_identity()) out.push_back(DecoratedDiagram::odd(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dims dims(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * rank, rank);
  BigInt catalan = binom / (rank + 1);
  Dims d{binom / 2, catalan - 1, 0};
  d.total = d.even + d.odd;
  return d;
}

}  // namespace jwtl
