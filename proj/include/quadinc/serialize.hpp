#pragma once

// JSON encoding shared by every module. Rationals are strings "p/q" ("p" when
// q == 1):
//
//   Point3   {"x": "1/2", "y": "0", "z": "-3"}
//   Plane    {"a": ..., "b": ..., "c": ..., "d": ...}      a x + b y + c z + d = 0
//   Line3    {"base": Point3, "direction": {"x": .., "y": .., "z": ..}}
//   Quadric  {"matrix": [[4 strings] x 4]}  or
//            {"coefficients": {"xx","yy","zz","xy","xz","yz","x","y","z","c"}}
//            (missing coefficients are 0). Output also carries
//            "classification" and, for cones, "apex".
//   Instance {"points": [Point3...], "planes": [Plane...], "quadric": Quadric?}

#include "quadinc/geometry.hpp"
#include "quadinc/quadric.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace quadinc {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Point3& p);
Json to_json(const Vec3& v);
Json to_json(const Plane& h);
Json to_json(const Line3& line);
Json to_json(const Quadric& v);

Point3 point_from_json(const Json& j);
Vec3 vec_from_json(const Json& j);
Plane plane_from_json(const Json& j);
Line3 line_from_json(const Json& j);
Quadric quadric_from_json(const Json& j);

std::vector<Point3> points_from_json(const Json& j);
std::vector<Plane> planes_from_json(const Json& j);

struct Instance {
  std::vector<Point3> points;
  std::vector<Plane> planes;
  std::optional<Quadric> quadric;
};

Json to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

/// Throws InputError when the file is missing or not valid JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Stable serialization used for every file the toolkit writes.
std::string dump(const Json& j);

}  // namespace quadinc
