#include "jwtl/tikz.hpp"

#include <map>
#include <sstream>

namespace jwtl {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string pt(double x, double y) { return "(" + num(x) + "," + num(y) + ")"; }

std::string polyline(const DyckPath& p) {
  std::string s;
  for (int x = 0; x <= p.length(); ++x) s += (x ? "--" : "") + pt(x, p.height(x));
  return s;
}

}  // namespace

std::string tiling_tikz(const Tiling& t, const TikzOptions& opt) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=" << num(opt.scale) << "]\n";
  os << "\\draw[very thick]" << polyline(t.lower) << ";\n";
  os << "\\draw[very thick]" << polyline(t.upper) << ";\n";
  std::map<Cell, int> owner;
  for (size_t i = 0; i < t.tiles.size(); ++i)
    for (const auto& c : t.tiles[i].cells) owner[c] = static_cast<int>(i);
  for (const auto& [c, i] : owner) {
    for (int dy : {1, -1}) {
      auto it = owner.find({c.x + 1, c.y + dy});
      if (it == owner.end() || it->second == i) continue;
      os << "\\draw" << pt(c.x, c.y + (dy > 0 ? 1 : -1)) << "--" << pt(c.x + 1, c.y) << ";\n";
    }
  }
  for (const auto& ct : opt.trajectories) {
    const auto& tr = ct.trajectory;
    if (tr.zero_length()) continue;
    const double off = ct.vertical ? 0.5 : -0.5;
    const Tile& first = t.tiles[tr.tiles.front()];
    const Tile& last = t.tiles[tr.tiles.back()];
    os << "\\draw[very thick," << ct.color << "]" << pt(first.left() - 0.5, first.height() - off);
    for (int k : tr.tiles)
      for (const auto& c : t.tiles[k].cells) os << "--" << pt(c.x, c.y);
    os << "--" << pt(last.right() + 0.5, last.height() + off) << ";\n";
  }
  for (const auto& c : opt.dotted)
    for (int s : {c.a, c.b})
      os << "\\draw" << pt(s - 0.5, (t.lower.height(s - 1) + t.lower.height(s)) / 2.0) << "node{$\\bullet$};\n";
  os << "\\end{tikzpicture}\n";
  if (opt.standalone) return tikz_document({os.str()});
  return os.str();
}

std::string tikz_document(const std::vector<std::string>& pictures) {
  std::string s = "\\documentclass[tikz]{standalone}\n\\begin{document}\n";
  for (const auto& p : pictures) s += p;
  s += "\\end{document}\n";
  return s;
}

}  // namespace jwtl
