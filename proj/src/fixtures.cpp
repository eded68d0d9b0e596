#include "jwtl/fixtures.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "jwtl/projections.hpp"

namespace jwtl {

namespace detail {
std::string_view golden_text();
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<GoldenTerm> parse_golden() {
  std::vector<GoldenTerm> out;
  std::istringstream in{std::string(detail::golden_text())};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto a = line.find(';'), b = line.find(';', a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw std::runtime_error("golden line " + std::to_string(lineno) + ": expected three fields");
    std::string key = trim(line.substr(0, a)), word = trim(line.substr(a + 1, b - a - 1)),
                expr = trim(line.substr(b + 1));
    GoldenTerm t;
    t.family = key.at(0);
    t.n = std::stoi(key.substr(1));
    t.word = word == "-" ? Word{} : parse_word(word);
    t.expr = expr;
    t.value = parse_qexpr(expr);
    out.push_back(std::move(t));
  }
  return out;
}

int family_rank(char family, int n) { return family == 'P' ? n + 1 : q_rank(n); }

}  // namespace

const std::vector<GoldenTerm>& golden_terms() {
  static const std::vector<GoldenTerm> terms = parse_golden();
  return terms;
}

TLElement golden_element(char family, int n) {
  const int r = family_rank(family, n);
  TLElement x(r);
  for (const auto& t : golden_terms()) {
    if (t.family != family || t.n != n) continue;
    ScaledDiagram s = word_to_element(t.word, r);
    x.add(s.diagram, t.value * s.scalar);
  }
  return x;
}

std::vector<std::pair<char, int>> golden_projections() {
  std::set<std::pair<char, int>> s;
  for (const auto& t : golden_terms()) s.insert({t.family, t.n});
  return {s.begin(), s.end()};
}

}  // namespace jwtl
