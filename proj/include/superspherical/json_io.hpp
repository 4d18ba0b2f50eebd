#pragma once

#include "superspherical/enveloping.hpp"
#include "superspherical/lie_superalgebra.hpp"
#include "superspherical/report.hpp"
#include "superspherical/symmetrization.hpp"
#include "superspherical/unipoly.hpp"

#include "json.hpp"

#include <string>

namespace superspherical {

using Json = nlohmann::ordered_json;

inline constexpr const char *schema_version = "1";

// [{"monomial": [exponents], "coeff": "p/q"}, ...] in ascending order.
Json to_json(const UElement &u);
UElement uelement_from_json(const Json &j, std::size_t dim);

// {"basis": "S(p)", "terms": [...]}
Json to_json(const SymmetricAlgebra &s, const SymElement &y);

// Ascending coefficient strings.
Json to_json(const UniPoly &p);

Json to_json(const CheckReport &r, bool with_time = false);

// {"generators": [{"name": "e", "parity": "odd"}, ...],
//  "brackets": [{"left": "e", "right": "e", "value": {"k2": "-2"}}, ...]}
// Only nonzero brackets with left <= right are written; the loader fills in
// the rest by super skew-symmetry. Throws std::invalid_argument on malformed
// documents.
Json algebra_to_json(const LieSuperalgebra &g);
LieSuperalgebra algebra_from_json(const Json &j);

// "gl12-osp12" (the nine-generator basis) or "gl(m|n)".
// Throws std::invalid_argument for an unknown name.
LieSuperalgebra builtin_algebra(const std::string &name);

} // namespace superspherical
