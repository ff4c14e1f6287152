#pragma once

// JSON encodings of the public value types. Rationals are always strings
// ("p" or "p/q") so values round-trip exactly.

#include "json.hpp"

#include "niemytzki/desc_classes.hpp"
#include "niemytzki/geometry.hpp"
#include "niemytzki/theorems.hpp"
#include "niemytzki/topology.hpp"

namespace niemytzki {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// ["x_1", ..., "x_n"]
Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json coords_to_json(const Coords& c);

/// {"kind": "interior-ball" | "half-ball" | "tangent-ball", "center": [...], "radius": "r"}
Json to_json(const BasicOpen& b);
BasicOpen basic_open_from_json(const Json& j);

/// {"countable": "true" | "false" | "unknown", ...}
Json to_json(const DescClass& d);
DescClass desc_class_from_json(const Json& j);

Json to_json(const ConvergenceVerdict& v);

Json to_json(const SubsetResult& s);
Json to_json(const Comparison& c);

/// {"space", "dimension", "properties", "boundary_subspace", "classes", "trace"}
Json to_json(const PropertyReport& r);
Json to_json(const TraceStep& s);

}  // namespace niemytzki
