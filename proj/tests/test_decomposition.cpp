#include "quadinc/decomposition.hpp"
#include "quadinc/errors.hpp"
#include "quadinc/harness.hpp"

#include <doctest.h>

using namespace quadinc;

namespace {

Rational R(const char* s) { return parse_rational(s); }
Point3 P(const char* x, const char* y, const char* z) { return {R(x), R(y), R(z)}; }
Vec3 V(const char* x, const char* y, const char* z) { return {R(x), R(y), R(z)}; }
Plane H(const char* a, const char* b, const char* c, const char* d) { return Plane(R(a), R(b), R(c), R(d)); }

bool check_passed(const AuditReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  FAIL("no check named " << name);
  return false;
}

struct Case {
  std::vector<Point3> points;
  std::vector<Plane> planes;
  Quadric v;
};

}  // namespace

TEST_CASE("grid with a degenerate transformation plane") {
  Case c{{P("0", "0", "0"), P("0", "1", "0"), P("1", "0", "0"), P("1", "1", "1")},
         {H("-1", "1", "1", "-1")},  // z - x + y - 1 = (x + 1)(y - 1) on z = xy
         Quadric::hyperbolic_paraboloid()};
  IncidenceGraph g = incidence_graph(c.points, c.planes);
  Decomposition d = decompose(c.points, c.planes, c.v);
  CHECK(d.residual.empty());
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].line == Line3(P("0", "1", "0"), V("1", "0", "1")));
  CHECK(d.factors[0].points == std::vector<std::size_t>{1, 3});
  CHECK(d.factors[0].planes == std::vector<std::size_t>{0});
  CHECK(audit_decomposition(c.points, c.planes, c.v, g, d).passed());
}

TEST_CASE("paraboloid keeps every incidence in the residual") {
  InstanceSpec spec;
  spec.family = QuadricFamily::Paraboloid;
  spec.m = 60;
  spec.n = 40;
  spec.seed = 3;
  auto inst = generate(spec);
  IncidenceGraph g = incidence_graph(inst.points, inst.planes);
  Decomposition d = decompose(inst.points, inst.planes, inst.quadric);
  CHECK(d.factors.empty());
  CHECK(d.residual == g.edges());
  CHECK(g.size() > 0);
  CHECK(audit_decomposition(inst.points, inst.planes, inst.quadric, g, d).passed());
}

TEST_CASE("a generic plane through one grid point") {
  Case c{{P("0", "0", "0"), P("0", "1", "0"), P("1", "0", "0"), P("1", "1", "1")},
         {Plane::with_normal(V("1", "2", "3"), P("1", "1", "1"))},
         Quadric::hyperbolic_paraboloid()};
  Decomposition d = decompose(c.points, c.planes, c.v);
  CHECK(d.residual == std::vector<Edge>{{3, 0}});
  CHECK(d.factors.empty());
}

TEST_CASE("cone apex incidences are routed separately") {
  Case c{{P("0", "0", "0"), P("3", "4", "5"), P("6", "8", "10"), P("1", "0", "1")},
         {H("4", "-3", "0", "0"),    // contains the ruling through (3,4,5)
          H("0", "0", "1", "-5")},   // z = 5
         Quadric::standard_cone()};
  IncidenceGraph g = incidence_graph(c.points, c.planes);
  Decomposition d = decompose(c.points, c.planes, c.v);
  CHECK(d.apex_incidences == std::vector<Edge>{{0, 0}});
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].points == std::vector<std::size_t>{1, 2});
  CHECK(d.residual == std::vector<Edge>{{1, 1}});
  CHECK(audit_decomposition(c.points, c.planes, c.v, g, d).passed());
}

TEST_CASE("irrational rulings and isolated points are counted") {
  QuadricCoefficients k{};
  k.xx = 1, k.yy = 1, k.zz = -2, k.c = -1;
  Quadric v = Quadric::from_coefficients(k);
  std::vector<Point3> pts{P("3", "0", "2"), P("0", "3", "2"), P("1", "0", "0")};
  std::vector<Plane> planes{H("1", "0", "0", "-1")};
  Decomposition d = decompose(pts, planes, v);
  CHECK(d.irrational_ruling_count == 6);
  CHECK(d.factors.empty());
  CHECK(d.residual == std::vector<Edge>{{2, 0}});

  std::vector<Point3> sp{P("0", "0", "1"), P("1", "0", "0")};
  std::vector<Plane> tangent{H("0", "0", "1", "-1")};
  Decomposition ds = decompose(sp, tangent, Quadric::unit_sphere());
  CHECK(ds.residual == std::vector<Edge>{{0, 0}});
  CHECK(ds.isolated_point_incidences == 1);
}

TEST_CASE("unsupported quadrics and off-surface points") {
  QuadricCoefficients cyl{};
  cyl.xx = 1, cyl.yy = 1, cyl.c = -1;
  std::vector<Point3> pts{P("1", "0", "0")};
  std::vector<Plane> planes{H("1", "0", "0", "-1")};
  CHECK_THROWS_AS(decompose(pts, planes, Quadric::from_coefficients(cyl)), InputError);
  std::vector<Point3> off{P("1", "1", "5")};
  CHECK_THROWS_AS(decompose(off, planes, Quadric::hyperbolic_paraboloid()), InputError);
}

TEST_CASE("the audit rejects tampered decompositions") {
  InstanceSpec spec;
  spec.family = QuadricFamily::HyperbolicParaboloid;
  spec.strategy = PlaneStrategy::RulingPlanes;
  spec.m = 50;
  spec.n = 30;
  spec.seed = 17;
  auto inst = generate(spec);
  IncidenceGraph g = incidence_graph(inst.points, inst.planes);
  const Decomposition good = decompose(inst.points, inst.planes, inst.quadric, g);
  REQUIRE(!good.factors.empty());
  CHECK(audit_decomposition(inst.points, inst.planes, inst.quadric, g, good).passed());

  SUBCASE("a factor edge moved to the residual") {
    Decomposition d = good;
    Edge e{d.factors[0].points[0], d.factors[0].planes[0]};
    d.residual.push_back(e);
    auto r = audit_decomposition(inst.points, inst.planes, inst.quadric, g, d);
    CHECK_FALSE(check_passed(r, "residual-purity"));
    CHECK_FALSE(check_passed(r, "residual-disjoint"));
  }
  SUBCASE("a factor dropped") {
    Decomposition d = good;
    d.factors.erase(d.factors.begin());
    CHECK_FALSE(check_passed(audit_decomposition(inst.points, inst.planes, inst.quadric, g, d), "coverage"));
  }
  SUBCASE("a factor with a foreign point") {
    Decomposition d = good;
    for (std::size_t i = 0; i < inst.points.size(); ++i)
      if (!d.factors[0].line.contains(inst.points[i])) {
        d.factors[0].points.push_back(i);
        break;
      }
    auto r = audit_decomposition(inst.points, inst.planes, inst.quadric, g, d);
    CHECK_FALSE(check_passed(r, "factor-soundness"));
  }
  SUBCASE("an index out of range") {
    Decomposition d = good;
    d.residual.push_back({inst.points.size(), 0});
    auto r = audit_decomposition(inst.points, inst.planes, inst.quadric, g, d);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(check_passed(r, "indices-in-range"));
  }
  SUBCASE("json round trip") {
    Decomposition back = decomposition_from_json(Json::parse(dump(to_json(good))));
    CHECK(dump(to_json(back)) == dump(to_json(good)));
    CHECK(audit_decomposition(inst.points, inst.planes, inst.quadric, g, back).passed());
    CHECK_THROWS_AS(decomposition_from_json(Json::parse("{\"residual\": [[1]]}")), InputError);
  }
}

TEST_CASE("bound report") {
  Case c{{P("0", "0", "0"), P("0", "1", "0"), P("1", "0", "0"), P("1", "1", "1")},
         {H("-1", "1", "1", "-1"), Plane::with_normal(V("1", "2", "3"), P("1", "1", "1"))},
         Quadric::hyperbolic_paraboloid()};
  IncidenceGraph g = incidence_graph(c.points, c.planes);
  Decomposition d = decompose(c.points, c.planes, c.v, g);
  BoundReport r = bound_report(4, 2, g, d);
  CHECK(r.incidences == 3);
  CHECK(r.g0 == 1);
  CHECK(r.sum_pl == 2);
  CHECK(r.sum_hl == 1);
  CHECK(r.sum_products == 2);
  CHECK(r.bound_quadric == eval_bound_quadric(4, 2));
  CHECK(r.ratio == Decimal(1) / eval_bound_quadric(4, 2));
  std::string row = bound_report_csv_row(r);
  CHECK(row.rfind("4,2,1,2,1,", 0) == 0);
  CHECK(bound_report_csv_header() == "m,n,G0,sumPl,sumHl,bound_quadric,bound_weak,ratio");
}

TEST_CASE("random sweeps decompose and audit cleanly") {
  auto specs = sweep_specs(25, 99, 5, 60);
  ExperimentReport report = run_experiment(specs);
  CHECK(report.errors() == 0);
  CHECK(report.all_passed());
}
