// Generating functions over Dyck tilings for the coefficients of Q_n.
#pragma once

#include <vector>

#include "jwtl/diagram.hpp"
#include "jwtl/dyck.hpp"

namespace jwtl {

// [h][2h-2]/([2h][h-1]), with 1/[2] at h = 1.
QRat tile_weight_even(int h);
// [h]/[h+1].
QRat tile_weight_A(int h);

// The tile contains every cell resting on the lower path over columns a-1..b
// of some dotted chord (a, b).
bool covers_dotted_chord(const Tile& tile, const DyckPath& lower, const std::vector<Chord>& dotted);
bool admissible_even(const Tiling& t, const std::vector<Chord>& dotted);

struct WeightedTiling {
  Tiling tiling;
  bool admissible = true;
  QRat weight;  // product of tile weights; zero when not admissible
};

// Every tiling between the chord path of d and the top path. Even dot count.
std::vector<WeightedTiling> even_tilings(const DecoratedDiagram& d);
QRat z_even(const DecoratedDiagram& d);

// Sum over tilings of lambda under the top path of the product of [h]/[h+1]. Memoized.
QRat wt_A(const DyckPath& lambda);

struct BicoloredHistory {
  Tiling tiling;
  std::vector<Trajectory> entries;  // vertical_history_full(tiling)
  int green = 0;                    // 1-based position in entries
  Tiling remainder;                 // after `green` deletions
  int doubled = 0;                  // red trajectories starting at height 1
  QRat weight;
};

struct RejectedHistory {
  Tiling tiling;
  int green = 0;
  std::vector<int> counts;  // q4_counts(tiling, green)
};

struct BicoloredResult {
  std::vector<BicoloredHistory> accepted;
  std::vector<RejectedHistory> rejected;
};

// Pairs (T, m) with T a tiling of lambda under the top path and m the position of
// a nonzero trajectory such that m deletions leave only trivial tiles.
BicoloredResult enumerate_bicolored(const DyckPath& lambda);
// Weight factors of a red and of the green trajectory with bottom/top heights.
QRat red_factor(int h_bottom, int h_top);
QRat green_factor(int h_bottom, int h_top);
// Exactly one dot.
QRat z_prime(const DecoratedDiagram& d);

}  // namespace jwtl
