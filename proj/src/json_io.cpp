#include "jwtl/json_io.hpp"

#include <algorithm>

namespace jwtl {

namespace {

Json poly_json(const LaurentPoly& p) {
  Json o = Json::object();
  for (const auto& [e, c] : p.coeffs()) o[std::to_string(e)] = c.get_str();
  return o;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) p += LaurentPoly::monomial(BigInt(v.get<std::string>()), std::stoi(k));
  return p;
}

Json chords_json(const std::vector<Chord>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({c.a, c.b});
  return a;
}

std::vector<Chord> chords_from_json(const Json& j) {
  std::vector<Chord> out;
  for (const auto& p : j) out.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  return out;
}

}  // namespace

Json to_json(const QRat& x) {
  Json o;
  o["num"] = poly_json(x.num());
  o["den"] = poly_json(x.den());
  return o;
}

QRat qrat_from_json(const Json& j) {
  return QRat::normalize(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json to_json(const DecoratedDiagram& d) {
  Json o;
  o["rank"] = d.rank();
  o["pairs"] = chords_json(d.matching().pairs());
  o["dots"] = chords_json(d.dots());
  return o;
}

DecoratedDiagram diagram_from_json(const Json& j) {
  return DecoratedDiagram(Matching(j.at("rank").get<int>(), chords_from_json(j.at("pairs"))),
                          chords_from_json(j.at("dots")));
}

Json to_json(const TLElement& x) {
  Json o;
  o["rank"] = x.rank();
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) {
    Json t;
    t["diagram"] = to_json(d);
    t["coef"] = to_json(c);
    terms.push_back(std::move(t));
  }
  o["terms"] = std::move(terms);
  return o;
}

TLElement element_from_json(const Json& j) {
  TLElement x(j.at("rank").get<int>());
  for (const auto& t : j.at("terms")) x.add(diagram_from_json(t.at("diagram")), qrat_from_json(t.at("coef")));
  return x;
}

Json to_json(const Tiling& t) {
  Json o;
  o["lower"] = t.lower.word();
  o["upper"] = t.upper.word();
  Json tiles = Json::array();
  for (const auto& tile : t.tiles) {
    Json cells = Json::array();
    for (const auto& c : tile.cells) cells.push_back({c.x, c.y});
    tiles.push_back(std::move(cells));
  }
  o["tiles"] = std::move(tiles);
  return o;
}

Tiling tiling_from_json(const Json& j) {
  Tiling t{DyckPath(j.at("lower").get<std::string>()), DyckPath(j.at("upper").get<std::string>()), {}};
  for (const auto& cells : j.at("tiles")) {
    Tile tile;
    for (const auto& c : cells) tile.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    t.tiles.push_back(std::move(tile));
  }
  std::sort(t.tiles.begin(), t.tiles.end());
  validate(t);
  return t;
}

}  // namespace jwtl
