#include "niemytzki/json_io.hpp"

#include "niemytzki/errors.hpp"

namespace niemytzki {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError(0, "rational must be encoded as a string");
  return Rat::parse(j.get<std::string>());
}

Json to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords()) arr.push_back(to_json(c));
  return arr;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError(0, "point must be a JSON array");
  std::vector<Rat> coords;
  for (const auto& c : j) coords.push_back(rat_from_json(c));
  return Point(std::move(coords));
}

Json coords_to_json(const Coords& c) {
  Json arr = Json::array();
  for (const auto& x : c) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const BasicOpen& b) {
  return Json{{"kind", std::string(kind_name(b))},
              {"center", to_json(center_of(b))},
              {"radius", to_json(radius_of(b))}};
}

BasicOpen basic_open_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Point center = point_from_json(j.at("center"));
  Rat radius = rat_from_json(j.at("radius"));
  if (kind == "interior-ball") return InteriorBall(std::move(center), std::move(radius));
  if (kind == "half-ball") return HalfBall(std::move(center), std::move(radius));
  if (kind == "tangent-ball") return TangentBall(std::move(center), std::move(radius));
  throw ParseError(0, "unknown basic open kind '" + kind + "'");
}

Json to_json(const DescClass& d) {
  Json out = Json::object();
  for (ClassFlag f : kClassFlags) out[std::string(flag_name(f))] = std::string(to_string(d.get(f)));
  return out;
}

DescClass desc_class_from_json(const Json& j) {
  DescClass d;
  for (ClassFlag f : kClassFlags) {
    const auto v = verdict_from_string(j.at(std::string(flag_name(f))).get<std::string>());
    if (!v) throw ParseError(0, "bad verdict for " + std::string(flag_name(f)));
    d.set(f, *v, {"json", ""});
  }
  return d;
}

Json to_json(const ConvergenceVerdict& v) {
  Json out{{"converges", v.converges}, {"conclusive", v.conclusive}};
  if (v.bound) {
    out["index_bound"] = {
        {"form", v.bound->form == IndexBound::Form::Linear ? "linear" : "quadratic"},
        {"coefficient", to_json(v.bound->coefficient)},
        {"description", v.bound->description()}};
  }
  if (v.blocking) out["blocking_neighborhood"] = to_json(*v.blocking);
  if (!v.isolating.empty()) {
    Json radii = Json::array();
    for (const auto& iso : v.isolating) {
      radii.push_back({{"point", to_json(iso.point)}, {"radius", to_json(iso.radius)}});
    }
    out["discreteness_radii"] = std::move(radii);
  }
  return out;
}

Json to_json(const SubsetResult& s) {
  Json out{{"verdict", std::string(to_string(s.verdict))}, {"rule", s.rule}};
  if (s.witness) out["witness"] = coords_to_json(*s.witness);
  return out;
}

Json to_json(const Comparison& c) {
  return Json{{"order", std::string(to_string(c.order))},
              {"strict", c.strict},
              {"a_subset_b", to_json(c.a_in_b)},
              {"b_subset_a", to_json(c.b_in_a)}};
}

Json to_json(const TraceStep& s) {
  return Json{{"property", s.property},
              {"rule", s.rule},
              {"citation", s.citation},
              {"inputs", s.inputs},
              {"verdict", s.verdict}};
}

Json to_json(const PropertyReport& r) {
  Json props = Json::object();
  for (const auto& p : r.properties) props[p.name] = std::string(to_string(p.value));
  props["dim_X"] = r.dim_x ? Json(*r.dim_x) : Json("unknown");
  Json boundary = Json::object();
  for (const auto& p : r.boundary) boundary[p.name] = std::string(to_string(p.value));
  boundary["dim"] = r.boundary_dim ? Json(*r.boundary_dim) : Json("unknown");
  Json trace = Json::array();
  for (const auto& s : r.trace) trace.push_back(to_json(s));
  return Json{{"space", r.space},
              {"dimension", r.dimension},
              {"properties", std::move(props)},
              {"boundary_subspace", std::move(boundary)},
              {"classes", {{"A", to_json(r.set_classes)}, {"complement", to_json(r.complement_classes)}}},
              {"trace", std::move(trace)}};
}

}  // namespace niemytzki
