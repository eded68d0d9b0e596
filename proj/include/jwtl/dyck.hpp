// Dyck paths, cover-inclusive Dyck tilings, Hermite histories and deletion.
//
// A path of size m is a word over {U, D} of length 2m; height(x) is the height
// after x steps. A unit cell is identified by its center (x, y) with x + y odd.
// Step s (1-based) runs from x = s-1 to x = s.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace jwtl {

class DyckPath {
 public:
  DyckPath() : h_{0} {}
  // Throws std::invalid_argument on a malformed word.
  explicit DyckPath(std::string word);
  static DyckPath top(int size);
  static DyckPath zigzag(int size);
  // All paths of a size in lexicographic order (D < U).
  static std::vector<DyckPath> all(int size);

  const std::string& word() const { return w_; }
  int size() const { return static_cast<int>(w_.size() / 2); }
  int length() const { return static_cast<int>(w_.size()); }
  int height(int x) const { return h_.at(x); }
  char step(int s) const { return w_.at(s - 1); }
  bool is_top() const;

  friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.w_ == b.w_; }
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.w_ <=> b.w_; }

 private:
  std::string w_;
  std::vector<int> h_;
};

// Pointwise comparison of heights; false on size mismatch.
bool path_leq(const DyckPath& lower, const DyckPath& upper);

struct Cell {
  int x = 0, y = 0;
  auto operator<=>(const Cell&) const = default;
};

struct Tile {
  std::vector<Cell> cells;  // increasing x
  int size() const { return static_cast<int>(cells.size() / 2); }
  int height() const { return cells.front().y; }
  int left() const { return cells.front().x; }
  int right() const { return cells.back().x; }
  bool trivial() const { return cells.size() == 1; }
  auto operator<=>(const Tile&) const = default;
};

bool is_dyck_tile(const std::vector<Cell>& cells);

struct Tiling {
  DyckPath lower, upper;
  std::vector<Tile> tiles;  // sorted
  bool all_trivial() const;
  int tile_of(Cell c) const;  // index or -1
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// Cells strictly between the paths, column-major. Throws std::invalid_argument
// unless lower <= upper with equal sizes.
std::vector<Cell> region_cells(const DyckPath& lower, const DyckPath& upper);
bool is_cover_inclusive(const Tiling& t);
// Throws std::logic_error unless the tiles are Dyck tiles partitioning the
// region and the tiling is cover-inclusive.
void validate(const Tiling& t);

std::vector<Tiling> enumerate_tilings(const DyckPath& lower, const DyckPath& upper);
// Exact cover over every Dyck tile of the region followed by a set-based
// cover-inclusiveness filter. Slow; used as an oracle.
std::vector<Tiling> enumerate_tilings_bruteforce(const DyckPath& lower, const DyckPath& upper);

struct Trajectory {
  std::vector<int> tiles;  // indices into Tiling::tiles, first to last along the line
  int start_step = 0;      // step crossed by the entry edge
  int end_step = 0;        // step crossed by the exit edge
  bool zero_length() const { return tiles.empty(); }
};

// Vertical lines run from the lower-left down-step edge of a tile's leftmost
// cell to the upper-right down-step edge of its rightmost cell. Nonzero
// trajectories, ordered by end step.
std::vector<Trajectory> vertical_history(const Tiling& t);
// Horizontal lines run between the up-step edges. Ordered by start step.
std::vector<Trajectory> horizontal_history(const Tiling& t);
// One entry per down step of the upper path (which must be the top path),
// zero-length entries at down steps no trajectory reaches.
std::vector<Trajectory> vertical_history_full(const Tiling& t);

Tiling mirror(const Tiling& t);

// Removes the first entry of vertical_history_full together with the U/D pair
// of the lower path under its entry edge, and shrinks the tiles over those two
// columns. Throws std::domain_error when the operation does not apply.
Tiling deletion(const Tiling& t);

// Tile counts of the entries after position m (1-based) of vertical_history_full.
std::vector<int> q4_counts(const Tiling& t, int m);
bool weakly_decreasing(const std::vector<int>& v);

std::string to_string(const Tiling& t);

}  // namespace jwtl
