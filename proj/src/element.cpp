#include "jwtl/element.hpp"

namespace jwtl {

TLElement TLElement::identity(int rank) { return from_diagram(DecoratedDiagram::identity(rank)); }

TLElement TLElement::from_diagram(const DecoratedDiagram& d, const QRat& c) {
  TLElement x(d.rank());
  x.add(d, c);
  return x;
}

TLElement TLElement::from_word(const Word& w, int rank) {
  ScaledDiagram s = word_to_element(w, rank);
  return from_diagram(s.diagram, s.scalar);
}

QRat TLElement::coef(const DecoratedDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? QRat(0) : it->second;
}

void TLElement::add(const DecoratedDiagram& d, const QRat& c) {
  if (d.rank() != rank_) throw std::invalid_argument("rank mismatch in TLElement");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(d, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

TLElement& TLElement::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch in TLElement product");
  // Collect coefficient products per (diagram, loop count) first so each
  // power of -[2] is multiplied in once.
  std::map<DecoratedDiagram, std::map<int, QRat>> acc;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      RawProduct p;
      try {
        p = compose_raw(da, db);
      } catch (const NonCanonical& e) {
        throw NonCanonical(std::string(e.what()) + " in product of " + da.to_string() + " and " + db.to_string());
      }
      acc[p.diagram][p.loops] += ca * cb;
    }
  }
  TLElement out(a.rank_);
  for (auto& [d, by_loops] : acc) {
    QRat total;
    for (auto& [k, c] : by_loops) total += k == 0 ? c : c * minus_two_pow(k);
    out.add(d, total);
  }
  return out;
}

TLElement extend_right(const TLElement& x) {
  TLElement out(x.rank() + 1);
  for (const auto& [d, c] : x.terms()) out.add(extend_right(d), c);
  return out;
}

}  // namespace jwtl
