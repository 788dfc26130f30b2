#pragma once

// JSON encodings: complex as [re, im], matrices row-major, homogeneous
// vectors as arrays of complex scalars, quadrics as {"n", "A"}.
// Real numbers may stand in for complex scalars on input.

#include <json.hpp>

#include "bombon/convex.hpp"
#include "bombon/moebius.hpp"
#include "bombon/quadric.hpp"
#include "bombon/sections.hpp"

namespace bombon::json {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const CVector& v);
Json to_json(const CMatrix& m);
Json to_json(const RVector& v);
Json to_json(const BombonType& t);
Json to_json(const QuadricBombon& x);
Json to_json(const Subspace& s);
Json to_json(const LineSection& s);
Json to_json(const convex::ComplexEllipsoid& e);
Json to_json(const convex::DiskVerdict& v);

/// All readers throw Error(BadInput) on malformed input.
Complex complex_from(const Json& j);
CVector vector_from(const Json& j);
CMatrix matrix_from(const Json& j);
HVector hvector_from(const Json& j);
/// {"n": n, "A": (n+1) x (n+1) matrix}; "n" is optional but checked when present.
QuadricBombon quadric_from(const Json& j, const Tolerance& tol = {});
/// Either a 2x2 matrix or {"matrix": ...}.
GenCircle circle_from(const Json& j);

Json parse(const std::string& text);

}  // namespace bombon::json
