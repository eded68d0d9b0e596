// Jones-Wenzl projections of types A and D and the coefficient engines.
//
// Q_n lives in rank n+1 for n >= 1; Q_0 = 1 + E_0/[2] is kept at rank 2.
// P_n lives in rank n+1 over undecorated diagrams.
#pragma once

#include <string>
#include <vector>

#include "jwtl/element.hpp"

namespace jwtl {

// [n]/[2n] for i = 1, [n][2i-2]/([2n][i-1]) for 2 <= i <= n+1.
QRat coef_g(int n, int i);
// [n][n+1-j]/([2n][n+1]) for 0 <= j <= n+1 (zero at j = n+1).
QRat coef_h(int n, int j);
// Coefficients of the three-term recursion.
QRat sentinelli_a(int n);
QRat sentinelli_b(int n);

// E_n E_{n-1} ... E_i; empty for i = n+1.
Word g_word(int n, int i);
// E_n ... E_2 E_0 for j = 0, E_n ... E_2 E_0 E_1 E_2 ... E_j for j >= 1.
Word h_word(int n, int j);
// E_{w_n} = h_{n,n}.
Word w_word(int n);

int q_rank(int n);

TLElement compute_P(int n);
// Product recursion Q_{n+1} = Q_n (sum coef_g g + sum coef_h h). Memoized.
const TLElement& compute_Q(int n);
// Three-term recursion with full element products.
TLElement compute_Q_sentinelli(int n);

struct Summand {
  std::string label;
  QRat value;
};
QRat sum_of(const std::vector<Summand>& s);

QRat coef_A_recursive(const Matching& m);
QRat coef_even_recursive(const DecoratedDiagram& d);
QRat coef_odd_recursive(const DecoratedDiagram& d);
QRat coef_mixed_recursive(const DecoratedDiagram& d);
// Sum over even decorations of m minus [2] times the single-dot coefficient.
QRat typeA_combination(const Matching& m);

// One level of each recursion, for --explain output.
std::vector<Summand> even_recursion_terms(const DecoratedDiagram& d);
std::vector<Summand> odd_recursion_terms(const DecoratedDiagram& d);
std::vector<Summand> mixed_recursion_terms(const DecoratedDiagram& d);
std::vector<Summand> typeA_recursion_terms(const Matching& m);

// Contributions Q_{n-1}-term x factor-term that land on d in the product recursion.
std::vector<Summand> product_terms(int n, const DecoratedDiagram& d);

// Reduced word for every basis diagram, found breadth-first with generators
// in increasing order; only products with scalar 1 are followed.
std::vector<std::pair<DecoratedDiagram, Word>> basis_words(int rank);
Word reduced_word(const DecoratedDiagram& d);

}  // namespace jwtl
