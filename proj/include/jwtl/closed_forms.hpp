// Closed-form coefficients of Q_n for families of reduced words.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jwtl/projections.hpp"

namespace jwtl {

enum class Pattern { chain, hook, e01, e013, e120, en310, gn31, zerogn1, l021gn3, l120gn1 };

std::string pattern_name(Pattern p);

struct ClosedFormCase {
  Pattern pattern;
  std::string name;  // e.g. "chain(3,1)"
  Word word;
  QRat value;
};

// chain(j,i): E_j ... E_i, 1 <= i <= j <= n.
QRat closed_chain(int n, int j, int i);
// hook(j,i): E_j ... E_1 E_0 E_2 ... E_i, 1 <= j <= n, 2 <= i <= n.
QRat closed_hook(int n, int j, int i);
QRat closed_e01(int n);
QRat closed_e013(int n);
QRat closed_e120(int n);
QRat closed_en310(int n);
QRat closed_gn31(int n);
QRat closed_zerogn1(int n);
QRat closed_l021gn3(int n);
QRat closed_l120gn1(int n);

// Every instance valid at this n, one entry per word (families with two words give two entries).
std::vector<ClosedFormCase> closed_form_cases(int n);
// Case whose word evaluates to d in rank n+1, if any.
std::optional<ClosedFormCase> closed_form_for(const DecoratedDiagram& d);

}  // namespace jwtl
