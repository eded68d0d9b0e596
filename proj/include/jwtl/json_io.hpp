// JSON forms of the library's values. Key order is fixed so output is byte-stable.
#pragma once

#include "json.hpp"
#include "jwtl/dyck.hpp"
#include "jwtl/element.hpp"

namespace jwtl {

using Json = nlohmann::ordered_json;

// {"num": {"exp": "coeff", ...}, "den": {...}}, exponents ascending.
Json to_json(const QRat& x);
QRat qrat_from_json(const Json& j);
// {"rank": r, "pairs": [[a,b],...], "dots": [[a,b],...]}
Json to_json(const DecoratedDiagram& d);
DecoratedDiagram diagram_from_json(const Json& j);
// {"rank": r, "terms": [{"diagram": ..., "coef": ...}, ...]}
Json to_json(const TLElement& x);
TLElement element_from_json(const Json& j);
// {"lower": "UD...", "upper": "...", "tiles": [[[x,y],...],...]}
Json to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

}  // namespace jwtl
