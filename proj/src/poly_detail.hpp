// Dense integer polynomial helpers shared by the arithmetic sources.
#pragma once

#include <optional>
#include <vector>

#include "jwtl/qlaurent.hpp"

namespace jwtl::detail {

// Index = degree.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b);
// Exact division over Z; nullopt if b does not divide a.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

}  // namespace jwtl::detail
