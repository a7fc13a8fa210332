#pragma once

#include "quadinc/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

namespace quadinc {

struct Vec3 {
  Rational x, y, z;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(const Rational& s) const { return {x * s, y * s, z * s}; }
  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  friend bool operator==(const Vec3&, const Vec3&) = default;
  friend std::strong_ordering operator<=>(const Vec3& a, const Vec3& b);
};

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// Scales v to a primitive integer vector whose first nonzero entry is
/// positive. v must be nonzero.
Vec3 primitive_direction(const Vec3& v);

struct Point3 {
  Rational x, y, z;

  Vec3 as_vec() const { return {x, y, z}; }
  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  static Point3 from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }
  Vec3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Point3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }

  friend bool operator==(const Point3&, const Point3&) = default;
  friend std::strong_ordering operator<=>(const Point3& a, const Point3& b);
};

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// (x - cx)^2 + (y - cy)^2 = radius_squared, radius_squared > 0.
struct Circle2 {
  Rational cx, cy, radius_squared;
};

/// a x + b y + c z + d = 0, stored with the first nonzero coefficient equal
/// to 1 so that equal planes have equal fields.
class Plane {
 public:
  /// Throws InputError when (a, b, c) == 0.
  Plane(Rational a, Rational b, Rational c, Rational d);

  /// Plane spanned by three points. Throws InputError when collinear.
  static Plane through(const Point3& p, const Point3& q, const Point3& r);
  /// Plane through `p` with normal `n` (n nonzero).
  static Plane with_normal(const Vec3& n, const Point3& p);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  Vec3 normal() const { return {a_, b_, c_}; }

  /// a x + b y + c z + d.
  Rational evaluate(const Point3& p) const;

  /// A point lying on the plane, chosen deterministically.
  Point3 some_point() const;
  /// Two independent direction vectors spanning the plane's directions.
  std::array<Vec3, 2> spanning_directions() const;

  friend bool operator==(const Plane&, const Plane&) = default;
  friend std::strong_ordering operator<=>(const Plane& a, const Plane& b);

 private:
  Rational a_, b_, c_, d_;
};

/// A line stored canonically: the direction is a primitive integer vector
/// with positive leading entry, and the base point has a zero coordinate at
/// the index of the direction's first nonzero entry.
class Line3 {
 public:
  /// Throws InputError when direction is zero.
  Line3(const Point3& through, const Vec3& direction);

  const Point3& base() const { return base_; }
  const Vec3& direction() const { return direction_; }
  Point3 at(const Rational& t) const { return base_ + direction_ * t; }

  bool contains(const Point3& p) const;

  friend bool operator==(const Line3&, const Line3&) = default;
  friend std::strong_ordering operator<=>(const Line3& a, const Line3& b);

 private:
  Point3 base_;
  Vec3 direction_;
};

bool point_on_plane(const Point3& p, const Plane& h);
bool line_in_plane(const Line3& line, const Plane& h);
bool collinear(const Point3& p, const Point3& q, const Point3& r);

/// Line shared by two planes; nullopt when they are parallel.
/// Throws InputError when the planes are identical.
std::optional<Line3> plane_intersection(const Plane& h, const Plane& g);

// --- lifting -------------------------------------------------------------

/// (x, y) -> (x, y, x^2 + y^2).
Point3 lift_point(const Point2& q);
/// Circle with center (a, b), radius^2 r2 -> plane z = 2a x + 2b y + (r2 - a^2 - b^2).
Plane lift_circle(const Circle2& c);
bool point_on_circle(const Point2& q, const Circle2& c);

// --- duality -------------------------------------------------------------

/// Point (a, b, c) -> plane z = a x + b y - c.
Plane dualize_point(const Point3& p);
/// Plane z = p x + q y - r -> point (p, q, r). Throws InputError for
/// vertical planes (c == 0); rotate the instance with generic_rotation first.
Point3 dualize_plane(const Plane& h);

// --- frames --------------------------------------------------------------

struct Matrix3 {
  std::array<std::array<Rational, 3>, 3> m;

  static Matrix3 identity();
  Vec3 operator*(const Vec3& v) const;
  Matrix3 operator*(const Matrix3& o) const;
  Matrix3 transposed() const;
  Rational determinant() const;
  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

/// A linear change of frame x' = forward * x, with its exact inverse.
struct Frame {
  Matrix3 forward;
  Matrix3 inverse;

  Point3 apply(const Point3& p) const;
  Plane apply(const Plane& h) const;
};

/// Seeded product of rational shears; seed 0 is the identity. Incidences are
/// preserved by construction; new seeds tilt away from vertical planes.
Frame generic_rotation(std::uint64_t seed);

}  // namespace quadinc
