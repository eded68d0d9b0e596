// Decorated Temperley-Lieb diagrams of types A and D.
//
// A diagram of rank r has 2r marked points. Bottom points are 1..r from left
// to right and top points are r+1..2r from right to left, so folding the top
// row down to the right of the bottom row is the identity on labels and a
// diagram is a noncrossing perfect matching of 1..2r (a chord diagram).
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "jwtl/qlaurent.hpp"

namespace jwtl {

struct Chord {
  int a = 0, b = 0;  // a < b
  auto operator<=>(const Chord&) const = default;
};

struct NonCanonical : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument unless pairs form a noncrossing perfect
  // matching of 1..2*rank.
  Matching(int rank, std::vector<Chord> pairs);
  static Matching identity(int rank);
  // Chord diagram of a Dyck word: U opens a chord, D closes the innermost.
  static Matching from_dyck(const std::string& word);

  int rank() const { return rank_; }
  const std::vector<Chord>& pairs() const { return pairs_; }
  int partner(int p) const { return partner_[p]; }
  Chord chord_of(int p) const;
  bool is_identity() const;
  // Not enclosed by any other chord. These are the outer-most caps, cups and
  // the left-most through strand.
  bool is_outer(Chord c) const;
  std::vector<Chord> outer_chords() const;
  std::string dyck_word() const;

  friend bool operator==(const Matching& x, const Matching& y) {
    return x.rank_ == y.rank_ && x.pairs_ == y.pairs_;
  }
  friend std::strong_ordering operator<=>(const Matching& x, const Matching& y) {
    if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
    return x.pairs_ <=> y.pairs_;
  }

 private:
  int rank_ = 0;
  std::vector<Chord> pairs_;    // sorted by a
  std::vector<int> partner_;    // 1-based
  std::vector<char> outer_;     // indexed by left endpoint
};

enum class Parity { even, odd, all };

class DecoratedDiagram {
 public:
  DecoratedDiagram() = default;
  // Validates the canonical-form rules: the number of dots is one or even;
  // a single dot sits on the chord through bottom point 1; an even set of dots
  // sits on outer chords only; the identity carries no dots.
  DecoratedDiagram(Matching m, std::vector<Chord> dots);
  static DecoratedDiagram identity(int rank);
  // The single-dot diagram over a non-identity matching.
  static DecoratedDiagram odd(Matching m);
  static DecoratedDiagram plain(Matching m) { return DecoratedDiagram(std::move(m), {}); }

  int rank() const { return m_.rank(); }
  const Matching& matching() const { return m_; }
  const std::vector<Chord>& dots() const { return dots_; }
  int dot_count() const { return static_cast<int>(dots_.size()); }
  bool is_odd() const { return dots_.size() == 1; }
  bool is_dotted(Chord c) const;
  std::string to_string() const;

  friend bool operator==(const DecoratedDiagram&, const DecoratedDiagram&) = default;
  friend std::strong_ordering operator<=>(const DecoratedDiagram& x, const DecoratedDiagram& y) {
    if (auto c = x.m_ <=> y.m_; c != 0) return c;
    return x.dots_ <=> y.dots_;
  }

 private:
  Matching m_;
  std::vector<Chord> dots_;  // sorted
};

struct ScaledDiagram {
  QRat scalar;
  DecoratedDiagram diagram;
};

// Product with the scalar kept as the exponent of -[2].
struct RawProduct {
  DecoratedDiagram diagram;
  int loops = 0;
};

// (-[2])^k, cached.
const QRat& minus_two_pow(int k);

DecoratedDiagram generator(int rank, int i);

// Stacks top over bottom. A single-dot factor contributes one parity marker
// and a closed loop with an odd number of dots contributes another; loops with
// an even number of dots give -[2]. With k >= 1 markers the result is the
// single-dot diagram with an extra (-[2])^(k-1); otherwise dots on through
// chords add mod 2 and the result must satisfy the canonical rules.
RawProduct compose_raw(const DecoratedDiagram& top, const DecoratedDiagram& bottom);
ScaledDiagram compose(const DecoratedDiagram& top, const DecoratedDiagram& bottom);

DecoratedDiagram extend_right(const DecoratedDiagram& d);
Matching extend_right(const Matching& m);

using Word = std::vector<int>;
ScaledDiagram word_to_element(const Word& word, int rank);
RawProduct word_to_raw(const Word& word, int rank);
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w, const std::string& sep = ",");
// E_a E_b ... as E_aE_b..., "1" for the empty word.
std::string word_label(const Word& w);
Word theta(Word w);

struct ChordView {
  std::string path;
  std::vector<Chord> dotted;
  friend bool operator==(const ChordView&, const ChordView&) = default;
};
ChordView to_chord(const DecoratedDiagram& d);
DecoratedDiagram from_chord(const ChordView& v);

struct InnermostCaps {
  std::vector<int> open;    // undotted
  std::vector<int> dotted;  // {1} or empty
};
InnermostCaps innermost_caps(const DecoratedDiagram& d);
// Positions i in 1..rank with chord (i, i+1), dots ignored.
std::vector<int> innermost_positions(const Matching& m);
Matching remove_cap(const Matching& m, int i);
DecoratedDiagram remove_cap(const DecoratedDiagram& d, int i);

DecoratedDiagram transpose(const DecoratedDiagram& d);
Matching forgetful(const DecoratedDiagram& d);

std::vector<Matching> enumerate_matchings(int rank);
// Every even decoration of m.
std::vector<DecoratedDiagram> even_decorations(const Matching& m);
std::vector<DecoratedDiagram> enumerate_basis(int rank, Parity parity);

struct Dims {
  BigInt even, odd, total;
};
// Closed formulas: binom(2r,r)/2 even, C_r - 1 odd.
Dims dims(int rank);

}  // namespace jwtl
