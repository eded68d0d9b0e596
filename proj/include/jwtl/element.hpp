// Linear combinations of decorated diagrams with rational-function coefficients.
#pragma once

#include <map>

#include "jwtl/diagram.hpp"

namespace jwtl {

class TLElement {
 public:
  using Terms = std::map<DecoratedDiagram, QRat>;

  explicit TLElement(int rank = 1) : rank_(rank) {}
  static TLElement identity(int rank);
  static TLElement from_diagram(const DecoratedDiagram& d, const QRat& c = QRat(1));
  static TLElement from_word(const Word& w, int rank);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  QRat coef(const DecoratedDiagram& d) const;

  void add(const DecoratedDiagram& d, const QRat& c);
  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  TLElement& operator*=(const QRat& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(TLElement a, const QRat& c) { return a *= c; }
  friend TLElement operator*(const QRat& c, TLElement a) { return a *= c; }
  // Algebra product: a on top of b.
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int rank_;
  Terms terms_;
};

TLElement extend_right(const TLElement& x);

}  // namespace jwtl
