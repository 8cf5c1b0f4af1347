#ifndef PG3XRAY_JSON_IO_HPP
#define PG3XRAY_JSON_IO_HPP

#include <json.hpp>

#include "pg3xray/admissibility.hpp"
#include "pg3xray/drq.hpp"
#include "pg3xray/pg3.hpp"
#include "pg3xray/transform.hpp"

namespace pg3xray {

using nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// Canonical geometry dump: field descriptor, point coordinate codes and
/// line Pluecker codes in enumeration order.
json geometry_to_json(const Geometry& g);

json drq_to_json(const Drq& d);
Drq drq_from_json(const json& j);

/// Exact rationals serialized as "num/den" strings (plain integer string
/// when the denominator is 1).
json rationals_to_json(const RatVector& v);
RatVector rationals_from_json(const json& j);

json point_function_to_json(const PointFunction& f);
PointFunction point_function_from_json(const json& j);
json line_function_to_json(const LineFunction& f);
LineFunction line_function_from_json(const json& j);

/// Complex file: {"q", "p", "k", "modulus", "lines": [indices]}; an
/// alternative "pluecker" array of 6-tuples is accepted and
/// re-canonicalized against the geometry on load.
json complex_to_json(const Geometry& g, const LineComplex& L);
LineComplex complex_from_json(const Geometry& g, const json& j);

json verdict_to_json(const AdmissibilityVerdict& v);

} // namespace pg3xray

#endif
