#include "jwtl/histories.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace jwtl {

namespace {

QRat qi(long n) { return QRat::qint(n); }

// [2k]/[k], taken as 1 at k = 0.
QRat doubling(int k) { return k == 0 ? QRat(1) : qi(2 * k) / qi(k); }

}  // namespace

QRat tile_weight_even(int h) { return qi(h) * doubling(h - 1) / qi(2 * h); }

QRat tile_weight_A(int h) { return qi(h) / qi(h + 1); }

bool covers_dotted_chord(const Tile& tile, const DyckPath& lower, const std::vector<Chord>& dotted) {
  for (const auto& c : dotted) {
    if (c.a - 1 < tile.left() || c.b > tile.right()) continue;
    bool all = true;
    for (int x = std::max(c.a - 1, 1); x <= c.b && all; ++x)
      all = std::binary_search(tile.cells.begin(), tile.cells.end(), Cell{x, lower.height(x) + 1});
    if (all) return true;
  }
  return false;
}

bool admissible_even(const Tiling& t, const std::vector<Chord>& dotted) {
  for (const auto& tile : t.tiles)
    if (covers_dotted_chord(tile, t.lower, dotted)) return false;
  return true;
}

std::vector<WeightedTiling> even_tilings(const DecoratedDiagram& d) {
  if (d.dot_count() % 2) throw std::invalid_argument("even generating function needs an even number of dots");
  ChordView v = to_chord(d);
  std::vector<WeightedTiling> out;
  for (auto& t : enumerate_tilings(DyckPath(v.path), DyckPath::top(d.rank()))) {
    WeightedTiling w{std::move(t), true, QRat(1)};
    w.admissible = admissible_even(w.tiling, v.dotted);
    if (!w.admissible) {
      w.weight = QRat(0);
    } else {
      for (const auto& tile : w.tiling.tiles) w.weight *= tile_weight_even(tile.height());
    }
    out.push_back(std::move(w));
  }
  return out;
}

QRat z_even(const DecoratedDiagram& d) {
  QRat z;
  for (const auto& w : even_tilings(d)) z += w.weight;
  return z;
}

QRat wt_A(const DyckPath& lambda) {
  static std::mutex mu;
  static std::map<std::string, QRat> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(lambda.word()); it != memo.end()) return it->second;
  }
  QRat s;
  for (const auto& t : enumerate_tilings(lambda, DyckPath::top(lambda.size()))) {
    QRat p(1);
    for (const auto& tile : t.tiles) p *= tile_weight_A(tile.height());
    s += p;
  }
  std::lock_guard lock(mu);
  memo.insert_or_assign(lambda.word(), s);
  return s;
}

QRat red_factor(int h_bottom, int h_top) { return qi(h_top) * doubling(h_bottom - 1) / qi(2 * h_top); }

QRat green_factor(int h_bottom, int h_top) {
  return qi(h_top) * qi(h_top + 1 - h_bottom) / (qi(2 * h_top) * qi(h_top + 1));
}

BicoloredResult enumerate_bicolored(const DyckPath& lambda) {
  if (lambda.is_top()) throw std::invalid_argument("bicolored histories need a lower path below the top path");
  BicoloredResult res;
  const int n = lambda.size();
  for (const auto& t : enumerate_tilings(lambda, DyckPath::top(n))) {
    auto entries = vertical_history_full(t);
    Tiling cur = t;
    bool alive = true;
    for (int m = 1; m <= n && alive; ++m) {
      try {
        cur = deletion(cur);
      } catch (const std::domain_error&) {
        alive = false;
      }
      if (entries[m - 1].zero_length()) continue;
      if (!alive || !cur.all_trivial()) {
        res.rejected.push_back({t, m, q4_counts(t, m)});
        continue;
      }
      BicoloredHistory h{t, entries, m, cur, 0, QRat(1)};
      auto heights = [&](const Trajectory& tr) {
        return std::pair{t.tiles[tr.tiles.front()].height(), t.tiles[tr.tiles.back()].height()};
      };
      for (int k = 0; k + 1 < m; ++k) {
        if (entries[k].zero_length()) continue;
        auto [hb, ht] = heights(entries[k]);
        if (hb == 1) ++h.doubled;
        h.weight *= red_factor(hb, ht);
      }
      auto [hb, ht] = heights(entries[m - 1]);
      h.weight *= green_factor(hb, ht);
      h.weight *= wt_A(cur.lower);
      for (int k = 0; k < h.doubled; ++k) h.weight *= QRat(2);
      res.accepted.push_back(std::move(h));
    }
  }
  return res;
}

QRat z_prime(const DecoratedDiagram& d) {
  if (!d.is_odd()) throw std::invalid_argument("z_prime needs exactly one dot");
  QRat z;
  for (const auto& h : enumerate_bicolored(DyckPath(to_chord(d).path)).accepted) z += h.weight;
  return z;
}

}  // namespace jwtl
