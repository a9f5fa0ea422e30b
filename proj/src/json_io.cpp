#include "cgx/json_io.hpp"

#include <fstream>
#include <iostream>

namespace cgx {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InvalidInput(std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  throw InvalidInput("rational values must be \"num/den\" strings or integers");
}

}  // namespace

Json names_json(const GroundSet& ground, Subset s) { return Json(ground.names_of(s)); }

Json to_json(const ConvexGeometry& g) {
  Json members = Json::array();
  for (Subset s : g.members()) members.push_back(names_json(g.ground(), s));
  return Json{{"ground", g.ground().names()}, {"convex", std::move(members)}};
}

ConvexGeometry geometry_from_json(const Json& j) {
  GroundSet ground(string_list(field(j, "ground"), "\"ground\""));
  const Json& convex = field(j, "convex");
  if (!convex.is_array()) throw InvalidInput("\"convex\" must be an array of element lists");
  std::vector<Subset> members;
  std::unordered_set<Subset> seen;
  for (const auto& item : convex) {
    const auto names = string_list(item, "convex member");
    Subset s;
    std::optional<ElementId> previous;
    for (const auto& name : names) {
      const ElementId e = ground.index_of(name);
      if (previous && e <= *previous) {
        throw InvalidInput("convex member " + item.dump() + " is not listed in ground order without repeats");
      }
      previous = e;
      s = s.with(e);
    }
    if (!seen.insert(s).second) throw InvalidInput("duplicate convex member " + item.dump());
    members.push_back(s);
  }
  return ConvexGeometry(std::move(ground), std::move(members));
}

Json to_json(const OrderingFamily& f) {
  Json orders = Json::array();
  for (const auto& o : f.orders()) {
    Json names = Json::array();
    for (ElementId e : o.ranked()) names.push_back(f.ground().name(e));
    orders.push_back(std::move(names));
  }
  return Json{{"ground", f.ground().names()}, {"orderings", std::move(orders)}};
}

OrderingFamily orderings_from_json(const Json& j) {
  GroundSet ground(string_list(field(j, "ground"), "\"ground\""));
  const Json& list = field(j, "orderings");
  if (!list.is_array()) throw InvalidInput("\"orderings\" must be an array of element lists");
  std::vector<Ordering> orders;
  for (const auto& item : list) {
    std::vector<ElementId> ranked;
    for (const auto& name : string_list(item, "ordering")) ranked.push_back(ground.index_of(name));
    orders.emplace_back(std::move(ranked), ground.size());
  }
  return OrderingFamily(std::move(ground), std::move(orders));
}

Json to_json(const RationalPoint& p) {
  Json coords = Json::array();
  for (const auto& c : p.coords) coords.push_back(to_string(c));
  return coords;
}

RationalPoint point_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("a point must be an array of rational strings");
  RationalPoint p;
  for (const auto& c : j) p.coords.push_back(rational_from_json(c));
  return p;
}

Json to_json(const ShellingInstance& inst) {
  Json points = Json::object();
  for (ElementId e = 0; e < inst.ground().size(); ++e) points[inst.ground().name(e)] = to_json(inst.point(e));
  Json q = Json::array();
  for (const auto& p : inst.q()) q.push_back(to_json(p));
  return Json{{"dimension", inst.dimension()}, {"points", std::move(points)}, {"Q", std::move(q)}};
}

ShellingInstance instance_from_json(const Json& j) {
  const Json& dim = field(j, "dimension");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw InvalidInput("\"dimension\" must be a positive integer");
  }
  const std::size_t dimension = dim.get<std::size_t>();
  const Json& points = field(j, "points");
  if (!points.is_object() || points.empty()) throw InvalidInput("\"points\" must be a nonempty object");
  std::vector<std::string> names;
  PointMap map;
  for (const auto& [name, value] : points.items()) {
    names.push_back(name);
    map.push_back(point_from_json(value));
    if (map.back().dimension() != dimension) throw InvalidInput("point '" + name + "' has the wrong dimension");
  }
  const Json& q_json = field(j, "Q");
  if (!q_json.is_array()) throw InvalidInput("\"Q\" must be an array of points");
  std::vector<RationalPoint> q;
  for (const auto& p : q_json) {
    q.push_back(point_from_json(p));
    if (q.back().dimension() != dimension) throw InvalidInput("a point of Q has the wrong dimension");
  }
  return ShellingInstance(GroundSet(std::move(names)), std::move(map), std::move(q));
}

Json to_json(const PolygonMap& m) {
  Json shapes = Json::object();
  for (ElementId e = 0; e < m.ground().size(); ++e) {
    Json vertices = Json::array();
    for (const auto& v : m.shape(e).vertices()) vertices.push_back(to_json(v));
    shapes[m.ground().name(e)] = std::move(vertices);
  }
  return Json{{"shapes", std::move(shapes)}};
}

PolygonMap polygon_map_from_json(const Json& j) {
  const Json& shapes = field(j, "shapes");
  if (!shapes.is_object() || shapes.empty()) throw InvalidInput("\"shapes\" must be a nonempty object");
  std::vector<std::string> names;
  std::vector<Polygon> polygons;
  for (const auto& [name, value] : shapes.items()) {
    if (!value.is_array()) throw InvalidInput("shape '" + name + "' must be an array of vertices");
    std::vector<RationalPoint> vertices;
    for (const auto& v : value) vertices.push_back(point_from_json(v));
    names.push_back(name);
    try {
      polygons.emplace_back(std::move(vertices));
    } catch (const InvalidInput& e) {
      throw InvalidInput("shape '" + name + "': " + e.what());
    }
  }
  return PolygonMap(GroundSet(std::move(names)), std::move(polygons));
}

Json read_json(const std::string& path, std::istream& stdin_stream) {
  try {
    if (path == "-") return Json::parse(stdin_stream);
    std::ifstream file(path);
    if (!file) throw InvalidInput("cannot open '" + path + "'");
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json(const Json& j, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  file << j.dump(2) << '\n';
  if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace cgx
