#include "quadinc/errors.hpp"
#include "quadinc/geometry.hpp"
#include "quadinc/random.hpp"

#include <doctest.h>

using namespace quadinc;

namespace {

Rational R(const char* s) { return parse_rational(s); }
Point3 P(const char* x, const char* y, const char* z) { return {R(x), R(y), R(z)}; }
Vec3 V(const char* x, const char* y, const char* z) { return {R(x), R(y), R(z)}; }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(R("6/4")) == "3/2");
  CHECK(to_string(R("-3")) == "-3");
  CHECK(to_string(R("2/-4")) == "-1/2");
  CHECK(to_string(R("0/7")) == "0");
  CHECK_THROWS_AS(R("1/0"), InputError);
  CHECK_THROWS_AS(R("1.5"), InputError);
  CHECK_THROWS_AS(R(""), InputError);
  CHECK_THROWS_AS(R("1/2/3"), InputError);
  Rational root;
  CHECK(rational_sqrt(R("9/4"), root));
  CHECK(root == R("3/2"));
  CHECK_FALSE(rational_sqrt(R("2"), root));
  CHECK_FALSE(rational_sqrt(R("-4"), root));
}

TEST_CASE("rng is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.rational(100, 7) == b.rational(100, 7));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    auto v = c.uniform(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
    CHECK(!c.nonzero_rational(2, 2).is_zero());
  }
}

TEST_CASE("point on plane") {
  CHECK(point_on_plane(P("0", "0", "0"), Plane(R("0"), R("0"), R("1"), R("0"))));
  CHECK(point_on_plane(P("1", "0", "1"), Plane(R("0"), R("0"), R("1"), R("-1"))));
  CHECK_FALSE(point_on_plane(P("1", "1", "1"), Plane(R("1"), R("1"), R("1"), R("-2"))));
  CHECK_THROWS_AS(Plane(R("0"), R("0"), R("0"), R("1")), InputError);
}

TEST_CASE("planes are canonical") {
  Plane a(R("2"), R("4"), R("-2"), R("6"));
  Plane b(R("-1/3"), R("-2/3"), R("1/3"), R("-1"));
  CHECK(a == b);
  CHECK(a.a() == 1);
  Plane t = Plane::through(P("1", "0", "0"), P("0", "1", "0"), P("0", "0", "1"));
  CHECK(t == Plane(R("1"), R("1"), R("1"), R("-1")));
  CHECK_THROWS_AS(Plane::through(P("0", "0", "0"), P("1", "1", "1"), P("2", "2", "2")), InputError);
  auto dirs = t.spanning_directions();
  CHECK(dot(dirs[0], t.normal()) == 0);
  CHECK(dot(dirs[1], t.normal()) == 0);
  CHECK(!cross(dirs[0], dirs[1]).is_zero());
  CHECK(point_on_plane(t.some_point(), t));
}

TEST_CASE("lines are canonical") {
  Line3 a(P("1", "1", "1"), V("2", "0", "2"));
  Line3 b(P("3", "1", "3"), V("-1/2", "0", "-1/2"));
  CHECK(a == b);
  CHECK(a.direction() == V("1", "0", "1"));
  CHECK(a.base() == P("0", "1", "0"));
  CHECK(a.contains(P("5", "1", "5")));
  CHECK_FALSE(a.contains(P("5", "1", "4")));
  CHECK_THROWS_AS(Line3(P("0", "0", "0"), V("0", "0", "0")), InputError);
}

TEST_CASE("line in plane") {
  Line3 x_axis(P("0", "0", "0"), V("1", "0", "0"));
  CHECK(line_in_plane(x_axis, Plane(R("0"), R("0"), R("1"), R("0"))));
  CHECK_FALSE(line_in_plane(x_axis, Plane(R("0"), R("0"), R("1"), R("-1"))));
  CHECK(line_in_plane(Line3(P("0", "0", "1"), V("1", "1", "0")), Plane(R("0"), R("0"), R("1"), R("-1"))));
}

TEST_CASE("plane intersection") {
  Plane h(R("0"), R("0"), R("1"), R("0")), g(R("1"), R("0"), R("0"), R("-2"));
  auto line = plane_intersection(h, g);
  REQUIRE(line);
  CHECK(*line == Line3(P("2", "0", "0"), V("0", "1", "0")));
  CHECK_FALSE(plane_intersection(h, Plane(R("0"), R("0"), R("1"), R("-3"))));
  CHECK_THROWS_AS(plane_intersection(h, h), InputError);

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Plane a(rng.rational(5, 3), rng.rational(5, 3), rng.nonzero_rational(5, 3), rng.rational(5, 3));
    Plane b(rng.nonzero_rational(5, 3), rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3));
    if (a == b) continue;
    auto l = plane_intersection(a, b);
    if (!l) continue;
    CHECK(line_in_plane(*l, a));
    CHECK(line_in_plane(*l, b));
  }
}

TEST_CASE("lifting") {
  CHECK(lift_point({R("0"), R("0")}) == P("0", "0", "0"));
  CHECK(lift_point({R("1"), R("0")}) == P("1", "0", "1"));
  CHECK(lift_point({R("1/2"), R("1/2")}) == P("1/2", "1/2", "1/2"));
  CHECK(lift_circle({R("0"), R("0"), R("1")}) == Plane(R("0"), R("0"), R("1"), R("-1")));
  CHECK(lift_circle({R("1"), R("0"), R("1")}) == Plane(R("-2"), R("0"), R("1"), R("0")));
  CHECK_THROWS_AS(lift_circle({R("1"), R("0"), R("0")}), InputError);
  Circle2 unit{R("0"), R("0"), R("1")};
  CHECK(point_on_circle({R("1"), R("0")}, unit));
  CHECK(point_on_plane(lift_point({R("1"), R("0")}), lift_circle(unit)));
  // A Pythagorean point keeps its incidence; a near miss keeps its absence.
  Circle2 c{R("1"), R("2"), R("25")};
  for (auto q : {Point2{R("4"), R("6")}, Point2{R("-3"), R("-1")}, Point2{R("4"), R("5")}})
    CHECK(point_on_circle(q, c) == point_on_plane(lift_point(q), lift_circle(c)));
}

TEST_CASE("duality") {
  Point3 origin = P("0", "0", "0");
  Plane z0(R("0"), R("0"), R("1"), R("0"));
  CHECK(dualize_point(origin) == z0);
  CHECK(dualize_plane(z0) == origin);
  Point3 p = P("1", "2", "3");
  Plane h(R("1"), R("1"), R("-1"), R("0"));  // z = x + y
  REQUIRE(point_on_plane(p, h));
  CHECK(dualize_point(p) == Plane(R("1"), R("2"), R("-1"), R("-3")));
  CHECK(dualize_plane(h) == P("1", "1", "0"));
  CHECK(point_on_plane(dualize_plane(h), dualize_point(p)));
  CHECK_THROWS_AS(dualize_plane(Plane(R("1"), R("0"), R("0"), R("0"))), InputError);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    Point3 q{rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4)};
    CHECK(dualize_plane(dualize_point(q)) == q);
  }
}

TEST_CASE("frames preserve incidence") {
  Frame id = generic_rotation(0);
  CHECK(id.forward == Matrix3::identity());
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    Frame f = generic_rotation(seed);
    CHECK(f.forward * f.inverse == Matrix3::identity());
    CHECK(f.forward.determinant() == 1);
    Rng rng(seed);
    Point3 a{rng.rational(5, 2), rng.rational(5, 2), rng.rational(5, 2)};
    Point3 b{rng.rational(5, 2), rng.rational(5, 2), rng.rational(5, 2)};
    Point3 c{rng.rational(5, 2), rng.rational(5, 2), rng.rational(5, 2)};
    if (collinear(a, b, c)) continue;
    Plane h = Plane::through(a, b, c);
    Point3 off = a + h.normal();
    CHECK(point_on_plane(f.apply(a), f.apply(h)));
    CHECK(point_on_plane(f.apply(c), f.apply(h)));
    CHECK_FALSE(point_on_plane(f.apply(off), f.apply(h)));
  }
  // A vertical plane gets tilted.
  Plane vertical(R("1"), R("0"), R("0"), R("0"));
  CHECK(!generic_rotation(3).apply(vertical).c().is_zero());
}
