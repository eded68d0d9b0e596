// Reference projections compiled into the library, keyed by word.
#pragma once

#include <string>
#include <vector>

#include "jwtl/element.hpp"

namespace jwtl {

struct GoldenTerm {
  char family;  // 'P' or 'Q'
  int n;
  Word word;
  std::string expr;
  QRat value;
};

const std::vector<GoldenTerm>& golden_terms();
// The listed terms of one projection, each word canonicalized through word_to_element.
TLElement golden_element(char family, int n);
// Projections present in the fixture, as (family, n).
std::vector<std::pair<char, int>> golden_projections();

}  // namespace jwtl
