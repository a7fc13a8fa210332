#include "quadinc/errors.hpp"
#include "quadinc/harness.hpp"
#include "quadinc/rulings.hpp"

#include <doctest.h>

#include <set>

using namespace quadinc;

namespace {

InstanceSpec make(QuadricFamily f, PlaneStrategy s, std::size_t m, std::size_t n, std::uint64_t seed) {
  InstanceSpec spec;
  spec.family = f;
  spec.strategy = s;
  spec.m = m;
  spec.n = n;
  spec.seed = seed;
  return spec;
}

const QuadricFamily kFamilies[] = {QuadricFamily::HyperbolicParaboloid, QuadricFamily::Paraboloid,
                                   QuadricFamily::Sphere, QuadricFamily::Cone, QuadricFamily::OneSheetHyperboloid};

}  // namespace

TEST_CASE("names round trip") {
  for (auto f : kFamilies) CHECK(parse_quadric_family(to_string(f)) == f);
  for (auto s : {PlaneStrategy::ThroughTriples, PlaneStrategy::RulingPlanes, PlaneStrategy::Random,
                 PlaneStrategy::MobiusPlanes})
    CHECK(parse_plane_strategy(to_string(s)) == s);
  CHECK_THROWS_AS(parse_quadric_family("torus"), InputError);
  CHECK_THROWS_AS(parse_plane_strategy("lines"), InputError);
}

TEST_CASE("generated points lie on the quadric, are distinct and reproducible") {
  for (auto f : kFamilies) {
    auto spec = make(f, PlaneStrategy::ThroughTriples, 80, 30, 5);
    auto inst = generate(spec);
    CHECK(inst.quadric == quadric_of(f));
    REQUIRE(inst.points.size() == 80);
    REQUIRE(inst.planes.size() == 30);
    for (const auto& p : inst.points) CHECK(point_on_quadric(p, inst.quadric));
    CHECK(std::set<Point3>(inst.points.begin(), inst.points.end()).size() == 80);
    CHECK(std::set<Plane>(inst.planes.begin(), inst.planes.end()).size() == 30);
    auto again = generate(spec);
    CHECK(again.points == inst.points);
    CHECK(again.planes == inst.planes);
    auto other = generate(make(f, PlaneStrategy::ThroughTriples, 80, 30, 6));
    CHECK(other.points != inst.points);
  }
}

TEST_CASE("ruling planes contain lines of the surface") {
  for (auto f : {QuadricFamily::HyperbolicParaboloid, QuadricFamily::Cone, QuadricFamily::OneSheetHyperboloid}) {
    auto inst = generate(make(f, PlaneStrategy::RulingPlanes, 60, 20, 11));
    std::size_t with_lines = 0;
    for (const auto& h : inst.planes) with_lines += lines_in_plane_section(h, inst.quadric).line_count > 0;
    CHECK(with_lines >= 10);
  }
  CHECK_THROWS_AS(generate(make(QuadricFamily::Sphere, PlaneStrategy::RulingPlanes, 10, 10, 1)), InputError);
}

TEST_CASE("mobius planes carry no lines") {
  auto inst = generate(make(QuadricFamily::HyperbolicParaboloid, PlaneStrategy::MobiusPlanes, 60, 40, 4));
  for (const auto& h : inst.planes) CHECK(lines_in_plane_section(h, inst.quadric).line_count == 0);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(make(QuadricFamily::Sphere, PlaneStrategy::Random, 0, 5, 1)), InputError);
  CHECK_THROWS_AS(validate(make(QuadricFamily::Sphere, PlaneStrategy::Random, 5, 0, 1)), InputError);
  auto bad = make(QuadricFamily::Sphere, PlaneStrategy::Random, 5, 5, 1);
  bad.den_bound = 0;
  CHECK_THROWS_AS(validate(bad), InputError);
  CHECK_THROWS_AS(validate(make(QuadricFamily::Paraboloid, PlaneStrategy::RulingPlanes, 5, 5, 1)), InputError);
  CHECK_NOTHROW(validate(make(QuadricFamily::Cone, PlaneStrategy::RulingPlanes, 5, 5, 1)));
}

TEST_CASE("spec json round trip") {
  auto spec = make(QuadricFamily::OneSheetHyperboloid, PlaneStrategy::Random, 12, 34, 56);
  spec.num_bound = 77;
  InstanceSpec back = instance_spec_from_json(Json::parse(dump(to_json(spec))));
  CHECK(dump(to_json(back)) == dump(to_json(spec)));
  CHECK(back.num_bound == 77);
  Json list = Json::array({to_json(spec), to_json(make(QuadricFamily::Cone, PlaneStrategy::ThroughTriples, 3, 4, 5))});
  CHECK(instance_specs_from_json(list).size() == 2);
  CHECK_THROWS_AS(instance_spec_from_json(Json::parse("{\"quadric\": \"torus\"}")), InputError);
}

TEST_CASE("experiments") {
  std::vector<InstanceSpec> specs{make(QuadricFamily::Paraboloid, PlaneStrategy::ThroughTriples, 50, 40, 1),
                                  make(QuadricFamily::Sphere, PlaneStrategy::Random, 50, 40, 2),
                                  make(QuadricFamily::HyperbolicParaboloid, PlaneStrategy::RulingPlanes, 50, 40, 3),
                                  make(QuadricFamily::Cone, PlaneStrategy::RulingPlanes, 50, 40, 4)};
  ExperimentReport rep = run_experiment(specs);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.all_passed());
  CHECK(rep.errors() == 0);
  CHECK(rep.rows[0].factor_count == 0);
  CHECK(rep.rows[1].factor_count == 0);
  CHECK(rep.rows[2].bounds.sum_hl > 0);
  CHECK(rep.rows[2].factor_count > 0);
  CHECK(rep.max_ratio() > 0);

  ExperimentOptions par;
  par.workers = 3;
  CHECK(experiment_csv(run_experiment(specs, par)) == experiment_csv(rep));

  std::string csv = experiment_csv(rep);
  CHECK(csv.rfind("index,quadric,strategy,seed,m,n,G0,sumPl,sumHl,bound_quadric,bound_weak,ratio,lines,factors,"
                  "apex_incidences,status\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("sweeps cover every family") {
  auto specs = sweep_specs(40, 7, 10, 20);
  std::set<std::pair<int, int>> combos;
  for (const auto& s : specs) {
    CHECK_NOTHROW(validate(s));
    CHECK(s.m >= 10);
    CHECK(s.m <= 20);
    combos.insert({static_cast<int>(s.family), static_cast<int>(s.strategy)});
  }
  for (auto f : kFamilies)
    CHECK(std::any_of(combos.begin(), combos.end(), [&](auto c) { return c.first == static_cast<int>(f); }));
  CHECK(combos.size() >= 12);
  CHECK(dump(to_json(sweep_specs(40, 7, 10, 20)[3])) == dump(to_json(specs[3])));
}
