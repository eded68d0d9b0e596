#include "jwtl/dyck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jwtl {

DyckPath::DyckPath(std::string word) : w_(std::move(word)) {
  h_.assign(w_.size() + 1, 0);
  for (size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] != 'U' && w_[i] != 'D') throw std::invalid_argument("Dyck word letters must be U or D: " + w_);
    h_[i + 1] = h_[i] + (w_[i] == 'U' ? 1 : -1);
    if (h_[i + 1] < 0) throw std::invalid_argument("Dyck word goes below zero: " + w_);
  }
  if (h_.back() != 0) throw std::invalid_argument("Dyck word does not return to zero: " + w_);
}

DyckPath DyckPath::top(int size) { return DyckPath(std::string(size, 'U') + std::string(size, 'D')); }

DyckPath DyckPath::zigzag(int size) {
  std::string w;
  for (int i = 0; i < size; ++i) w += "UD";
  return DyckPath(w);
}

std::vector<DyckPath> DyckPath::all(int size) {
  std::vector<DyckPath> out;
  std::string w;
  std::function<void(int, int)> go = [&](int up, int down) {
    if (up == size && down == size) {
      out.emplace_back(w);
      return;
    }
    if (down < up) {
      w.push_back('D');
      go(up, down + 1);
      w.pop_back();
    }
    if (up < size) {
      w.push_back('U');
      go(up + 1, down);
      w.pop_back();
    }
  };
  go(0, 0);
  return out;
}

bool DyckPath::is_top() const { return *this == top(size()); }

bool path_leq(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) return false;
  for (int x = 0; x <= lower.length(); ++x)
    if (lower.height(x) > upper.height(x)) return false;
  return true;
}

bool is_dyck_tile(const std::vector<Cell>& cells) {
  if (cells.empty() || cells.size() % 2 == 0) return false;
  const int h = cells.front().y;
  for (size_t i = 0; i < cells.size(); ++i) {
    if ((cells[i].x + cells[i].y) % 2 == 0 || cells[i].y < h) return false;
    if (i && (cells[i].x != cells[i - 1].x + 1 || std::abs(cells[i].y - cells[i - 1].y) != 1)) return false;
  }
  return cells.back().y == h;
}

bool Tiling::all_trivial() const {
  return std::all_of(tiles.begin(), tiles.end(), [](const Tile& t) { return t.trivial(); });
}

int Tiling::tile_of(Cell c) const {
  for (size_t i = 0; i < tiles.size(); ++i)
    if (std::binary_search(tiles[i].cells.begin(), tiles[i].cells.end(), c)) return static_cast<int>(i);
  return -1;
}

std::vector<Cell> region_cells(const DyckPath& lower, const DyckPath& upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("paths have different sizes");
  if (!path_leq(lower, upper)) throw std::invalid_argument("lower path is not below upper path");
  std::vector<Cell> out;
  for (int x = 1; x < lower.length(); ++x)
    for (int y = lower.height(x) + 1; y < upper.height(x); y += 2) out.push_back({x, y});
  return out;
}

namespace {

std::map<Cell, int> cell_owner(const Tiling& t) {
  std::map<Cell, int> owner;
  for (size_t i = 0; i < t.tiles.size(); ++i)
    for (const auto& c : t.tiles[i].cells) owner[c] = static_cast<int>(i);
  return owner;
}

bool cover_inclusive(const Tiling& t, const std::map<Cell, int>& owner) {
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    int below = 0, host = -1;
    bool single_host = true;
    for (const auto& c : t.tiles[i].cells) {
      Cell d{c.x, c.y - 2};
      if (d.y < t.lower.height(d.x)) {
        ++below;
        continue;
      }
      auto it = owner.find(d);
      int o = it == owner.end() ? -1 : it->second;
      if (o < 0 || (host >= 0 && o != host)) single_host = false;
      host = o;
    }
    const int n = static_cast<int>(t.tiles[i].cells.size());
    if (below == n) continue;
    if (below > 0 || !single_host) return false;
  }
  return true;
}

void sort_tiles(Tiling& t) { std::sort(t.tiles.begin(), t.tiles.end()); }

}  // namespace

bool is_cover_inclusive(const Tiling& t) { return cover_inclusive(t, cell_owner(t)); }

void validate(const Tiling& t) {
  std::vector<Cell> region = region_cells(t.lower, t.upper);
  std::vector<Cell> seen;
  for (const auto& tile : t.tiles) {
    if (!is_dyck_tile(tile.cells)) throw std::logic_error("not a Dyck tile in " + to_string(t));
    seen.insert(seen.end(), tile.cells.begin(), tile.cells.end());
  }
  std::sort(seen.begin(), seen.end());
  if (seen != region) throw std::logic_error("tiles do not partition the region in " + to_string(t));
  if (!is_cover_inclusive(t)) throw std::logic_error("tiling is not cover-inclusive: " + to_string(t));
}

std::vector<Tiling> enumerate_tilings(const DyckPath& lower, const DyckPath& upper) {
  const std::vector<Cell> region = region_cells(lower, upper);
  std::map<Cell, int> index;
  for (size_t i = 0; i < region.size(); ++i) index[region[i]] = static_cast<int>(i);
  std::vector<char> covered(region.size(), 0);
  std::vector<Tiling> out;
  Tiling cur{lower, upper, {}};

  std::function<void()> place = [&]() {
    auto first = std::find(covered.begin(), covered.end(), 0);
    if (first == covered.end()) {
      Tiling t = cur;
      sort_tiles(t);
      if (is_cover_inclusive(t)) out.push_back(std::move(t));
      return;
    }
    const Cell start = region[first - covered.begin()];
    const int h = start.y;
    std::vector<Cell> path{start};
    std::vector<int> used{static_cast<int>(first - covered.begin())};
    covered[used[0]] = 1;
    std::function<void()> grow = [&]() {
      const Cell last = path.back();
      if (path.size() % 2 == 1 && last.y == h) {
        cur.tiles.push_back({path});
        place();
        cur.tiles.pop_back();
      }
      for (int dy : {-1, 1}) {
        Cell next{last.x + 1, last.y + dy};
        if (next.y < h) continue;
        auto it = index.find(next);
        if (it == index.end() || covered[it->second]) continue;
        covered[it->second] = 1;
        path.push_back(next);
        grow();
        path.pop_back();
        covered[it->second] = 0;
      }
    };
    grow();
    covered[used[0]] = 0;
  };
  place();
  std::sort(out.begin(), out.end(), [](const Tiling& a, const Tiling& b) { return a.tiles < b.tiles; });
  return out;
}

std::vector<Tiling> enumerate_tilings_bruteforce(const DyckPath& lower, const DyckPath& upper) {
  const std::vector<Cell> region = region_cells(lower, upper);
  const std::set<Cell> in_region(region.begin(), region.end());
  // Every Dyck tile inside the region.
  std::vector<std::set<Cell>> candidates;
  for (const auto& start : region) {
    std::vector<Cell> path{start};
    std::function<void()> walk = [&]() {
      if (is_dyck_tile(path)) candidates.emplace_back(path.begin(), path.end());
      for (int dy : {-1, 1}) {
        Cell next{path.back().x + 1, path.back().y + dy};
        if (next.y < start.y || !in_region.count(next)) continue;
        path.push_back(next);
        walk();
        path.pop_back();
      }
    };
    walk();
  }
  std::vector<std::set<Cell>> chosen;
  std::set<Cell> covered;
  std::vector<Tiling> out;
  auto inclusive = [&](const std::vector<std::set<Cell>>& tiles) {
    for (const auto& t : tiles) {
      std::set<Cell> moved;
      for (const auto& c : t) moved.insert({c.x, c.y - 2});
      bool under = std::all_of(moved.begin(), moved.end(), [&](const Cell& c) { return c.y < lower.height(c.x); });
      bool inside = std::any_of(tiles.begin(), tiles.end(), [&](const std::set<Cell>& o) {
        return &o != &t && std::includes(o.begin(), o.end(), moved.begin(), moved.end());
      });
      if (!under && !inside) return false;
    }
    return true;
  };
  std::function<void()> cover = [&]() {
    auto it = std::find_if(region.begin(), region.end(), [&](const Cell& c) { return !covered.count(c); });
    if (it == region.end()) {
      if (!inclusive(chosen)) return;
      Tiling t{lower, upper, {}};
      for (const auto& s : chosen) t.tiles.push_back({{s.begin(), s.end()}});
      sort_tiles(t);
      out.push_back(std::move(t));
      return;
    }
    for (const auto& cand : candidates) {
      if (!cand.count(*it)) continue;
      if (std::any_of(cand.begin(), cand.end(), [&](const Cell& c) { return covered.count(c) > 0; })) continue;
      chosen.push_back(cand);
      covered.insert(cand.begin(), cand.end());
      cover();
      for (const auto& c : cand) covered.erase(c);
      chosen.pop_back();
    }
  };
  cover();
  std::sort(out.begin(), out.end(), [](const Tiling& a, const Tiling& b) { return a.tiles < b.tiles; });
  return out;
}

namespace {

// Chains tiles whose rightmost cell at height h hands over to a tile whose
// leftmost cell is (x_R + 1, h + dy).
std::vector<Trajectory> chains(const Tiling& t, int dy) {
  std::map<Cell, int> leftmost;
  for (size_t i = 0; i < t.tiles.size(); ++i) leftmost[t.tiles[i].cells.front()] = static_cast<int>(i);
  const int n = static_cast<int>(t.tiles.size());
  std::vector<int> next(n, -1);
  std::vector<char> has_prev(n, 0);
  for (int i = 0; i < n; ++i) {
    const Tile& tile = t.tiles[i];
    auto it = leftmost.find({tile.right() + 1, tile.height() + dy});
    if (it != leftmost.end()) {
      next[i] = it->second;
      has_prev[it->second] = 1;
    }
  }
  std::vector<Trajectory> out;
  for (int i = 0; i < n; ++i) {
    if (has_prev[i]) continue;
    Trajectory tr;
    for (int k = i; k >= 0; k = next[k]) tr.tiles.push_back(k);
    tr.start_step = t.tiles[tr.tiles.front()].left();
    tr.end_step = t.tiles[tr.tiles.back()].right() + 1;
    out.push_back(std::move(tr));
  }
  return out;
}

}  // namespace

std::vector<Trajectory> vertical_history(const Tiling& t) {
  auto out = chains(t, 1);
  std::sort(out.begin(), out.end(), [](const Trajectory& a, const Trajectory& b) { return a.end_step < b.end_step; });
  return out;
}

std::vector<Trajectory> horizontal_history(const Tiling& t) {
  auto out = chains(t, -1);
  std::sort(out.begin(), out.end(),
            [](const Trajectory& a, const Trajectory& b) { return a.start_step < b.start_step; });
  return out;
}

std::vector<Trajectory> vertical_history_full(const Tiling& t) {
  if (!t.upper.is_top()) throw std::invalid_argument("full vertical history needs the top path as upper path");
  const int n = t.upper.size();
  std::vector<Trajectory> out(n);
  for (int k = 0; k < n; ++k) out[k].start_step = out[k].end_step = n + 1 + k;
  for (auto& tr : vertical_history(t)) {
    int k = tr.end_step - n - 1;
    if (k < 0 || k >= n || !out[k].zero_length())
      throw std::logic_error("trajectory does not end on a free down step of the upper path");
    out[k] = std::move(tr);
  }
  return out;
}

Tiling mirror(const Tiling& t) {
  auto flip = [](const DyckPath& p) {
    std::string w(p.word().rbegin(), p.word().rend());
    for (auto& c : w) c = c == 'U' ? 'D' : 'U';
    return DyckPath(w);
  };
  Tiling m{flip(t.lower), flip(t.upper), {}};
  const int len = t.lower.length();
  for (const auto& tile : t.tiles) {
    Tile r;
    for (auto it = tile.cells.rbegin(); it != tile.cells.rend(); ++it) r.cells.push_back({len - it->x, it->y});
    m.tiles.push_back(std::move(r));
  }
  sort_tiles(m);
  return m;
}

Tiling deletion(const Tiling& t) {
  const int n = t.upper.size();
  if (n < 1) throw std::domain_error("cannot delete from an empty tiling");
  auto entries = vertical_history_full(t);
  const Trajectory& first = entries.front();
  const int xl = first.zero_length() ? first.end_step : t.tiles[first.tiles.front()].left();
  if (xl < 2 || t.lower.step(xl - 1) != 'U' || t.lower.step(xl) != 'D')
    throw std::domain_error("lower path has no U/D pair under the first trajectory in " + to_string(t));
  std::string w = t.lower.word();
  w.erase(xl - 2, 2);
  Tiling out{DyckPath(w), DyckPath::top(n - 1), {}};
  std::set<int> gone(first.tiles.begin(), first.tiles.end());
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    if (gone.count(static_cast<int>(i))) continue;
    Tile r;
    for (const auto& c : t.tiles[i].cells) {
      if (c.x == xl - 1 || c.x == xl) continue;
      r.cells.push_back({c.x > xl ? c.x - 2 : c.x, c.y});
    }
    if (!r.cells.empty()) out.tiles.push_back(std::move(r));
  }
  sort_tiles(out);
  validate(out);
  return out;
}

std::vector<int> q4_counts(const Tiling& t, int m) {
  auto entries = vertical_history_full(t);
  if (m < 1 || m > static_cast<int>(entries.size())) throw std::out_of_range("green index out of range");
  std::vector<int> out;
  for (size_t k = m; k < entries.size(); ++k) out.push_back(static_cast<int>(entries[k].tiles.size()));
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) { return std::is_sorted(v.rbegin(), v.rend()); }

std::string to_string(const Tiling& t) {
  std::ostringstream os;
  os << t.lower.word() << "/" << t.upper.word() << " {";
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    os << (i ? " " : "") << "[";
    for (size_t k = 0; k < t.tiles[i].cells.size(); ++k)
      os << (k ? " " : "") << "(" << t.tiles[i].cells[k].x << "," << t.tiles[i].cells[k].y << ")";
    os << "]";
  }
  os << "}";
  return os.str();
}

}  // namespace jwtl
