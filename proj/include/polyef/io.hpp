#pragma once

#include "polyef/ef.hpp"
#include "polyef/lp.hpp"
#include "polyef/reduction.hpp"

#include "json.hpp"

#include <string>

namespace polyef::io {

/// Output documents keep insertion order so reports read top to bottom.
using Json = nlohmann::ordered_json;

// Input. Rationals may be strings ("22/3", "22.5") or JSON integers; JSON
// floating-point numbers are rejected. Unknown object keys are rejected.
// Every parser throws ParseError (or DimensionMismatch) on malformed input.

Rational rational_from_json(const Json &j);
RVector vector_from_json(const Json &j);
/// Rows must be nonempty and of equal length.
RMatrix matrix_from_json(const Json &j);

/// {"dim", "hrep"?, "vrep"?}; at least one representation, dim ≥ 1.
Polyhedron polyhedron_from_json(const Json &j, const Limits &limits = {});
/// {"matrix", "offset"?}; a missing offset means a linear map.
AffineMap affine_map_from_json(const Json &j);
/// {"X": polyhedron | null, "Y", "graph": {"B", "C", "b"}, "alpha"}.
ReductionInstance reduction_instance_from_json(const Json &j);

Json parse(const std::string &text);

// Output. Rationals are always emitted as canonical strings.

Json to_json(const Rational &q);
Json to_json(const RVector &v);
Json to_json(const RMatrix &m);
Json to_json(const HRep &h);
Json to_json(const VRep &v);
/// Polyhedron document with whichever representations are requested.
Json polyhedron_json(std::size_t dim, const HRep *h, const VRep *v);
Json to_json(const AffineMap &map);
Json to_json(const LpOutcome &out);
Json to_json(const EfVerdict &verdict);
Json to_json(const SizeReport &report);
Json to_json(const AffineGraph &graph);
Json to_json(const TwoStepResult &result);
Json to_json(const EquivalenceReport &report);
Json to_json(const CorrespondenceReport &report);

} // namespace polyef::io
