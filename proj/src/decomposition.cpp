#include "quadinc/decomposition.hpp"

#include "quadinc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace quadinc {

namespace {

void require_decomposable(const Quadric& v) {
  switch (v.kind()) {
    case QuadricKind::DoublyRuled:
    case QuadricKind::NonRuled:
    case QuadricKind::Cone:
      return;
    default:
      throw InputError(std::string("decomposition needs a doubly-ruled, non-ruled or conical quadric, got ") +
                       std::string(to_string(v.kind())));
  }
}

std::size_t find_line(const std::vector<Line3>& sorted, const Line3& line) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), line);
  if (it == sorted.end() || !(*it == line)) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

std::vector<Edge> factor_edges(const std::vector<LineFactor>& factors) {
  std::vector<Edge> out;
  for (const auto& f : factors)
    for (std::size_t i : f.points)
      for (std::size_t j : f.planes) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.point) + "," + std::to_string(e.plane) + ")";
}

}  // namespace

LineSet build_line_set(std::span<const Point3> points, const Quadric& v) {
  LineSet out;
  out.lines_through.resize(points.size());
  std::vector<std::vector<Line3>> per_point(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!point_on_quadric(points[i], v))
      throw InputError("point " + std::to_string(i) + " is not on the quadric");
    PointRulings r = lines_through_point(points[i], v);
    if (r.apex) {
      out.apex_index = i;
      continue;
    }
    out.irrational_ruling_count += static_cast<std::size_t>(r.irrational);
    per_point[i] = std::move(r.lines);
    out.lines.insert(out.lines.end(), per_point[i].begin(), per_point[i].end());
  }
  std::sort(out.lines.begin(), out.lines.end());
  out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const Line3& line : per_point[i]) out.lines_through[i].push_back(find_line(out.lines, line));
  return out;
}

std::vector<Line3> build_L(std::span<const Point3> points, const Quadric& v) {
  return build_line_set(points, v).lines;
}

std::size_t Decomposition::sum_points() const {
  std::size_t s = 0;
  for (const auto& f : factors) s += f.points.size();
  return s;
}

std::size_t Decomposition::sum_planes() const {
  std::size_t s = 0;
  for (const auto& f : factors) s += f.planes.size();
  return s;
}

std::size_t Decomposition::sum_products() const {
  std::size_t s = 0;
  for (const auto& f : factors) s += f.points.size() * f.planes.size();
  return s;
}

Decomposition decompose(std::span<const Point3> points, std::span<const Plane> planes, const Quadric& v,
                        unsigned workers) {
  require_decomposable(v);
  return decompose(points, planes, v, incidence_graph(points, planes, workers));
}

Decomposition decompose(std::span<const Point3> points, std::span<const Plane> planes, const Quadric& v,
                        const IncidenceGraph& graph) {
  require_decomposable(v);
  if (graph.point_count() != points.size() || graph.plane_count() != planes.size())
    throw InputError("incidence graph does not match the instance");
  LineSet lines = build_line_set(points, v);

  // Lines of L inside each plane (at most two), via the plane's conic section.
  std::vector<std::vector<std::size_t>> plane_lines(planes.size());
  std::vector<bool> isolated(planes.size(), false);
  std::vector<std::vector<std::size_t>> h_of(lines.lines.size());
  for (std::size_t j = 0; j < planes.size(); ++j) {
    PlaneSection s = lines_in_plane_section(planes[j], v);
    isolated[j] = s.kind == SectionKind::IsolatedPoint;
    for (const Line3& line : s.lines) {
      std::size_t idx = find_line(lines.lines, line);
      if (idx == lines.lines.size()) continue;
      plane_lines[j].push_back(idx);
      h_of[idx].push_back(j);
    }
  }
  std::vector<std::vector<std::size_t>> p_of(lines.lines.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t idx : lines.lines_through[i]) p_of[idx].push_back(i);

  Decomposition d;
  d.irrational_ruling_count = lines.irrational_ruling_count;
  for (std::size_t idx = 0; idx < lines.lines.size(); ++idx) {
    if (h_of[idx].empty() || p_of[idx].empty()) continue;
    d.factors.push_back({lines.lines[idx], p_of[idx], h_of[idx]});
  }

  for (const Edge& e : graph.edges()) {
    if (lines.apex_index && e.point == *lines.apex_index) {
      d.apex_incidences.push_back(e);
      continue;
    }
    const auto& through = lines.lines_through[e.point];
    const auto& inside = plane_lines[e.plane];
    bool explained = std::any_of(through.begin(), through.end(), [&](std::size_t idx) {
      return std::find(inside.begin(), inside.end(), idx) != inside.end();
    });
    if (!explained) {
      d.residual.push_back(e);
      if (isolated[e.plane]) ++d.isolated_point_incidences;
    }
  }
  return d;
}

// --- audit -----------------------------------------------------------------

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

std::string AuditReport::summary() const {
  std::string out;
  for (const auto& c : checks)
    if (!c.passed) out += c.name + ": " + c.detail + "\n";
  return out;
}

AuditReport audit_decomposition(std::span<const Point3> points, std::span<const Plane> planes, const Quadric& v,
                                const IncidenceGraph& graph, const Decomposition& d, AuditOptions options) {
  AuditReport report;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };
  const std::size_t m = points.size(), n = planes.size();

  {
    bool ok = graph.point_count() == m && graph.plane_count() == n;
    auto in_range = [&](const Edge& e) { return e.point < m && e.plane < n; };
    ok = ok && std::all_of(d.residual.begin(), d.residual.end(), in_range) &&
         std::all_of(d.apex_incidences.begin(), d.apex_incidences.end(), in_range);
    for (const auto& f : d.factors) {
      ok = ok && std::all_of(f.points.begin(), f.points.end(), [&](std::size_t i) { return i < m; }) &&
           std::all_of(f.planes.begin(), f.planes.end(), [&](std::size_t j) { return j < n; });
    }
    check("indices-in-range", ok, "decomposition refers to points or planes outside the instance");
    if (!ok) return report;
  }

  // Factor soundness.
  {
    bool ok = true;
    std::string why;
    for (const auto& f : d.factors) {
      if (f.points.empty() || f.planes.empty()) {
        ok = false;
        why = "empty factor side";
        break;
      }
      if (!line_in_quadric(f.line, v)) {
        ok = false;
        why = "factor line not contained in the quadric";
        break;
      }
      for (std::size_t i : f.points)
        if (!f.line.contains(points[i])) {
          ok = false;
          why = "factor point " + std::to_string(i) + " not on its line";
        }
      for (std::size_t j : f.planes)
        if (!line_in_plane(f.line, planes[j])) {
          ok = false;
          why = "factor plane " + std::to_string(j) + " does not contain its line";
        }
      if (!ok) break;
    }
    check("factor-soundness", ok, why);
  }

  const std::vector<Edge> fedges = factor_edges(d.factors);
  std::vector<Edge> residual = d.residual, apex = d.apex_incidences;
  std::sort(residual.begin(), residual.end());
  std::sort(apex.begin(), apex.end());

  // Coverage: residual + factors + apex == G exactly.
  {
    std::vector<Edge> all = residual;
    all.insert(all.end(), fedges.begin(), fedges.end());
    all.insert(all.end(), apex.begin(), apex.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    bool ok = all == graph.edges();
    std::string why;
    if (!ok) {
      std::vector<Edge> extra, missing;
      std::set_difference(all.begin(), all.end(), graph.edges().begin(), graph.edges().end(),
                          std::back_inserter(extra));
      std::set_difference(graph.edges().begin(), graph.edges().end(), all.begin(), all.end(),
                          std::back_inserter(missing));
      why = std::to_string(extra.size()) + " non-incidences covered, " + std::to_string(missing.size()) +
            " incidences uncovered";
      if (!missing.empty()) why += ", e.g. " + edge_text(missing.front());
      if (!extra.empty()) why += ", e.g. " + edge_text(extra.front());
    }
    check("coverage", ok, why);
  }

  // Disjointness of the residual from every factor and from the apex edges.
  {
    std::vector<Edge> overlap;
    std::set_intersection(residual.begin(), residual.end(), fedges.begin(), fedges.end(),
                          std::back_inserter(overlap));
    std::set_intersection(residual.begin(), residual.end(), apex.begin(), apex.end(), std::back_inserter(overlap));
    check("residual-disjoint", overlap.empty(),
          overlap.empty() ? "" : "residual edge " + edge_text(overlap.front()) + " also in a factor");
  }

  // Independent purity audit: brute-force scan of the full line set.
  LineSet lines = build_line_set(points, v);
  {
    bool ok = true;
    std::string why;
    std::vector<std::vector<std::size_t>> by_point(m);
    for (const Edge& e : residual) by_point[e.point].push_back(e.plane);
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (by_point[i].empty()) continue;
      std::vector<const Line3*> on;
      for (const Line3& line : lines.lines)
        if (line.contains(points[i])) on.push_back(&line);
      for (std::size_t j : by_point[i])
        for (const Line3* line : on)
          if (line_in_plane(*line, planes[j])) {
            ok = false;
            why = "residual edge " + edge_text({i, j}) + " is explained by a line of L";
          }
    }
    check("residual-purity", ok, why);
  }

  // Apex routing.
  {
    bool ok = true;
    std::string why;
    for (const Edge& e : apex) {
      if (!v.apex() || !(points[e.point] == *v.apex())) {
        ok = false;
        why = "apex incidence " + edge_text(e) + " not at the apex";
        break;
      }
    }
    if (v.kind() == QuadricKind::Cone) {
      for (const Line3& line : lines.lines)
        if (!line.contains(*v.apex())) {
          ok = false;
          why = "cone line misses the apex";
          break;
        }
    }
    check("apex-routing", ok, why);
  }

  // Budgets. Each non-apex point lies on at most 2 lines of a quadric and
  // each plane contains at most 2.
  {
    const std::size_t sp = d.sum_points(), sh = d.sum_planes();
    check("point-budget", sp <= 2 * m,
          "sum |P_l| = " + std::to_string(sp) + " > 2m = " + std::to_string(2 * m));
    check("plane-budget", sh <= 2 * n,
          "sum |H_l| = " + std::to_string(sh) + " > 2n = " + std::to_string(2 * n));
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < m; ++i)
      if (lines.lines_through[i].size() > 2) {
        ok = false;
        why = "point " + std::to_string(i) + " on more than 2 lines";
      }
    check("lines-per-point", ok, why);
  }

  // Plane sections: <= 2 lines each; collect the line-free ones.
  std::vector<std::size_t> line_free;
  {
    bool ok = true;
    std::string why;
    for (std::size_t j = 0; j < n; ++j) {
      PlaneSection s = lines_in_plane_section(planes[j], v);
      if (s.line_count > 2 || s.lines.size() > static_cast<std::size_t>(s.line_count)) {
        ok = false;
        why = "plane " + std::to_string(j) + " section has more than 2 lines";
      }
      if (s.line_count == 0) line_free.push_back(j);
    }
    check("lines-per-plane", ok, why);
  }

  if (v.kind() == QuadricKind::NonRuled) {
    check("non-ruled-no-lines", lines.lines.empty() && d.factors.empty(),
          std::to_string(lines.lines.size()) + " lines found on a non-ruled quadric");
  }

  if (options.pseudo_circle) {
    bool ok = true;
    std::string why;
    CurvePairCounter counter(v, planes);
    for (std::size_t a = 0; a < line_free.size() && ok; ++a)
      for (std::size_t b = a + 1; b < line_free.size(); ++b) {
        CurvePairIntersection c = counter.count(line_free[a], line_free[b]);
        if (c.infinite || c.count > 2) {
          ok = false;
          why = "sections of planes " + std::to_string(line_free[a]) + " and " + std::to_string(line_free[b]) +
                " meet " + (c.infinite ? std::string("in a line") : std::to_string(c.count) + " times");
          break;
        }
      }
    check("pseudo-circles", ok, why);
  }
  return report;
}

// --- reports ---------------------------------------------------------------

BoundReport bound_report(std::size_t m, std::size_t n, const IncidenceGraph& graph, const Decomposition& d,
                         const Decimal& kappa) {
  BoundReport r;
  r.m = m;
  r.n = n;
  r.incidences = graph.size();
  r.g0 = d.residual.size();
  r.sum_pl = d.sum_points();
  r.sum_hl = d.sum_planes();
  r.sum_products = d.sum_products();
  const std::uint64_t mm = std::max<std::size_t>(m, 1), nn = std::max<std::size_t>(n, 1);
  r.bound_quadric = eval_bound_quadric(mm, nn);
  r.bound_weak = eval_bound_weak(mm, nn, kappa);
  r.bound_small_m = eval_bound_small_m(nn, r.sum_products);
  r.ratio = Decimal(r.g0) / r.bound_quadric;
  return r;
}

std::string bound_report_csv_header() { return "m,n,G0,sumPl,sumHl,bound_quadric,bound_weak,ratio"; }

std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.m << ',' << r.n << ',' << r.g0 << ',' << r.sum_pl << ',' << r.sum_hl << ','
      << format_decimal(r.bound_quadric) << ',' << format_decimal(r.bound_weak) << ',' << format_decimal(r.ratio);
  return out.str();
}

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.point, e.plane}));
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of [point, plane] pairs");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputError("malformed edge " + e.dump());
    out.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
  }
  return out;
}

std::vector<std::size_t> indices_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of indices");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw InputError("malformed index " + e.dump());
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors)
    factors.push_back(Json{{"line", to_json(f.line)}, {"points", f.points}, {"planes", f.planes}});
  return Json{{"residual", edges_to_json(d.residual)},
              {"factors", factors},
              {"apex_incidences", edges_to_json(d.apex_incidences)},
              {"irrational_ruling_count", d.irrational_ruling_count},
              {"isolated_point_incidences", d.isolated_point_incidences}};
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("decomposition must be a JSON object");
  Decomposition d;
  try {
    d.residual = edges_from_json(j.at("residual"));
    d.apex_incidences = edges_from_json(j.at("apex_incidences"));
    for (const auto& f : j.at("factors")) {
      d.factors.push_back(
          {line_from_json(f.at("line")), indices_from_json(f.at("points")), indices_from_json(f.at("planes"))});
    }
    d.irrational_ruling_count = j.value("irrational_ruling_count", std::size_t{0});
    d.isolated_point_incidences = j.value("isolated_point_incidences", std::size_t{0});
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed decomposition: ") + e.what());
  }
  return d;
}

}  // namespace quadinc
