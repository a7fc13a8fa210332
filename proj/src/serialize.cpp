#include "quadinc/serialize.hpp"

#include "quadinc/errors.hpp"

#include <fstream>
#include <sstream>

namespace quadinc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\" in " + j.dump());
  return j.at(key);
}

Rational rational_field(const Json& j, const char* key) { return rational_from_json(field(j, key)); }

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("expected a rational string, got " + j.dump());
}

Json to_json(const Point3& p) {
  return Json{{"x", rational_to_json(p.x)}, {"y", rational_to_json(p.y)}, {"z", rational_to_json(p.z)}};
}

Json to_json(const Vec3& v) {
  return Json{{"x", rational_to_json(v.x)}, {"y", rational_to_json(v.y)}, {"z", rational_to_json(v.z)}};
}

Json to_json(const Plane& h) {
  return Json{{"a", rational_to_json(h.a())},
              {"b", rational_to_json(h.b())},
              {"c", rational_to_json(h.c())},
              {"d", rational_to_json(h.d())}};
}

Json to_json(const Line3& line) {
  return Json{{"base", to_json(line.base())}, {"direction", to_json(line.direction())}};
}

Json to_json(const Quadric& v) {
  Json rows = Json::array();
  for (const auto& row : v.matrix()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(rational_to_json(e));
    rows.push_back(r);
  }
  Json out{{"matrix", rows}, {"classification", std::string(to_string(v.kind()))}};
  if (v.apex()) out["apex"] = to_json(*v.apex());
  return out;
}

Point3 point_from_json(const Json& j) {
  return {rational_field(j, "x"), rational_field(j, "y"), rational_field(j, "z")};
}

Vec3 vec_from_json(const Json& j) {
  return {rational_field(j, "x"), rational_field(j, "y"), rational_field(j, "z")};
}

Plane plane_from_json(const Json& j) {
  return Plane(rational_field(j, "a"), rational_field(j, "b"), rational_field(j, "c"), rational_field(j, "d"));
}

Line3 line_from_json(const Json& j) {
  return Line3(point_from_json(field(j, "base")), vec_from_json(field(j, "direction")));
}

Quadric quadric_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) {
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 4) throw InputError("quadric matrix must be 4x4");
    Matrix4 q;
    for (int i = 0; i < 4; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 4) throw InputError("quadric matrix must be 4x4");
      for (int k = 0; k < 4; ++k) q[i][k] = rational_from_json(rows[i][k]);
    }
    return Quadric(q);
  }
  if (j.is_object() && j.contains("coefficients")) {
    const Json& c = j.at("coefficients");
    if (!c.is_object()) throw InputError("quadric coefficients must be an object");
    static const char* const kNames[] = {"xx", "yy", "zz", "xy", "xz", "yz", "x", "y", "z", "c"};
    for (const auto& [key, _] : c.items()) {
      bool known = false;
      for (const char* n : kNames) known = known || key == n;
      if (!known) throw InputError("unknown quadric coefficient \"" + key + "\"");
    }
    auto get = [&](const char* key) { return c.contains(key) ? rational_from_json(c.at(key)) : Rational(0); };
    return Quadric::from_coefficients(QuadricCoefficients{get("xx"), get("yy"), get("zz"), get("xy"), get("xz"),
                                                          get("yz"), get("x"), get("y"), get("z"), get("c")});
  }
  throw InputError("quadric needs \"matrix\" or \"coefficients\"");
}

std::vector<Point3> points_from_json(const Json& j) {
  const Json& list = (j.is_object() && j.contains("points")) ? j.at("points") : j;
  if (!list.is_array()) throw InputError("expected a JSON list of points");
  std::vector<Point3> out;
  out.reserve(list.size());
  for (const auto& e : list) out.push_back(point_from_json(e));
  return out;
}

std::vector<Plane> planes_from_json(const Json& j) {
  const Json& list = (j.is_object() && j.contains("planes")) ? j.at("planes") : j;
  if (!list.is_array()) throw InputError("expected a JSON list of planes");
  std::vector<Plane> out;
  out.reserve(list.size());
  for (const auto& e : list) out.push_back(plane_from_json(e));
  return out;
}

Json to_json(const Instance& instance) {
  Json pts = Json::array(), pls = Json::array();
  for (const auto& p : instance.points) pts.push_back(to_json(p));
  for (const auto& h : instance.planes) pls.push_back(to_json(h));
  Json out{{"points", pts}, {"planes", pls}};
  if (instance.quadric) out["quadric"] = to_json(*instance.quadric);
  return out;
}

Instance instance_from_json(const Json& j) {
  Instance out;
  out.points = points_from_json(field(j, "points"));
  out.planes = planes_from_json(field(j, "planes"));
  if (j.contains("quadric")) out.quadric = quadric_from_json(j.at("quadric"));
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace quadinc
