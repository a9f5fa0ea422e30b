#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cgx/generators.hpp"
#include "cgx/orderings.hpp"
#include "cgx/polygon.hpp"
#include "cgx/shelling.hpp"

namespace cgx {

/// Insertion-ordered JSON so emitted objects follow ground-set order.
using Json = nlohmann::ordered_json;

// Geometry: {"ground": [...], "convex": [[...], ...]}, member lists in ground order.
Json to_json(const ConvexGeometry& g);
ConvexGeometry geometry_from_json(const Json& j);

// Orderings: {"ground": [...], "orderings": [[best, ..., worst], ...]}.
Json to_json(const OrderingFamily& f);
OrderingFamily orderings_from_json(const Json& j);

// Embedding: {"dimension": M, "points": {"a": ["-3", "-3"], ...}, "Q": [[...], ...]}.
Json to_json(const ShellingInstance& inst);
ShellingInstance instance_from_json(const Json& j);

// Polygon map: {"shapes": {"a": [["-1", "0"], ["1", "0"]], ...}}.
Json to_json(const PolygonMap& m);
PolygonMap polygon_map_from_json(const Json& j);

Json to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);

Json names_json(const GroundSet& ground, Subset s);

/// Parses a file, or standard input when path is "-". Throws InvalidInput on bad JSON.
Json read_json(const std::string& path, std::istream& stdin_stream);

/// Writes pretty-printed JSON plus a newline. Throws std::runtime_error on I/O failure.
void write_json(const Json& j, const std::filesystem::path& path);

}  // namespace cgx
