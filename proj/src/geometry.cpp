#include "quadinc/geometry.hpp"

#include "quadinc/errors.hpp"
#include "quadinc/random.hpp"

namespace quadinc {

namespace {

std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare3(const Rational& a0, const Rational& a1, const Rational& a2,
                              const Rational& b0, const Rational& b1, const Rational& b2) {
  if (auto c = compare(a0, b0); c != 0) return c;
  if (auto c = compare(a1, b1); c != 0) return c;
  return compare(a2, b2);
}

int first_nonzero(const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) return i;
  return -1;
}

}  // namespace

std::strong_ordering operator<=>(const Vec3& a, const Vec3& b) {
  return compare3(a.x, a.y, a.z, b.x, b.y, b.z);
}

std::strong_ordering operator<=>(const Point3& a, const Point3& b) {
  return compare3(a.x, a.y, a.z, b.x, b.y, b.z);
}

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 primitive_direction(const Vec3& v) {
  int lead = first_nonzero(v);
  if (lead < 0) throw InputError("zero direction vector");
  Integer den_lcm(1);
  for (int i = 0; i < 3; ++i) den_lcm = lcm(den_lcm, denominator_of(v[i]));
  std::array<Integer, 3> ints;
  Integer g(0);
  for (int i = 0; i < 3; ++i) {
    ints[i] = numerator_of(v[i]) * (den_lcm / denominator_of(v[i]));
    g = gcd(g, ints[i]);
  }
  if (ints[lead] < 0) g = -g;
  return {Rational(ints[0] / g), Rational(ints[1] / g), Rational(ints[2] / g)};
}

// --- Plane ---------------------------------------------------------------

Plane::Plane(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Rational lead;
  if (!a_.is_zero())
    lead = a_;
  else if (!b_.is_zero())
    lead = b_;
  else if (!c_.is_zero())
    lead = c_;
  else
    throw InputError("plane with zero normal");
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
  d_ /= lead;
}

Plane Plane::with_normal(const Vec3& n, const Point3& p) {
  return Plane(n.x, n.y, n.z, -dot(n, p.as_vec()));
}

Plane Plane::through(const Point3& p, const Point3& q, const Point3& r) {
  Vec3 n = cross(q - p, r - p);
  if (n.is_zero()) throw InputError("plane through collinear points");
  return with_normal(n, p);
}

Rational Plane::evaluate(const Point3& p) const { return a_ * p.x + b_ * p.y + c_ * p.z + d_; }

Point3 Plane::some_point() const {
  if (!a_.is_zero()) return {-d_ / a_, Rational(0), Rational(0)};
  if (!b_.is_zero()) return {Rational(0), -d_ / b_, Rational(0)};
  return {Rational(0), Rational(0), -d_ / c_};
}

std::array<Vec3, 2> Plane::spanning_directions() const {
  const Rational zero(0), one(1);
  if (!a_.is_zero()) return {Vec3{-b_, a_, zero}, Vec3{-c_, zero, a_}};
  if (!b_.is_zero()) return {Vec3{one, zero, zero}, Vec3{zero, -c_, b_}};
  return {Vec3{one, zero, zero}, Vec3{zero, one, zero}};
}

std::strong_ordering operator<=>(const Plane& a, const Plane& b) {
  if (auto c = compare3(a.a_, a.b_, a.c_, b.a_, b.b_, b.c_); c != 0) return c;
  return compare(a.d_, b.d_);
}

// --- Line3 ---------------------------------------------------------------

Line3::Line3(const Point3& through, const Vec3& direction)
    : direction_(primitive_direction(direction)) {
  int lead = first_nonzero(direction_);
  Rational t = through[lead] / direction_[lead];
  base_ = through + direction_ * (-t);
}

bool Line3::contains(const Point3& p) const {
  // The base has a zero coordinate at the direction's lead index, so the
  // only candidate parameter is p[lead] / direction[lead].
  int lead = first_nonzero(direction_);
  Rational t = p[lead] / direction_[lead];
  for (int i = 0; i < 3; ++i) {
    if (i == lead) continue;
    if (base_[i] + t * direction_[i] != p[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Line3& a, const Line3& b) {
  if (auto c = a.direction_ <=> b.direction_; c != 0) return c;
  return a.base_ <=> b.base_;
}

// --- predicates ----------------------------------------------------------

bool point_on_plane(const Point3& p, const Plane& h) { return h.evaluate(p).is_zero(); }

bool line_in_plane(const Line3& line, const Plane& h) {
  return point_on_plane(line.base(), h) && dot(line.direction(), h.normal()).is_zero();
}

bool collinear(const Point3& p, const Point3& q, const Point3& r) {
  return cross(q - p, r - p).is_zero();
}

std::optional<Line3> plane_intersection(const Plane& h, const Plane& g) {
  if (h == g) throw InputError("intersection of identical planes");
  Vec3 dir = cross(h.normal(), g.normal());
  if (dir.is_zero()) return std::nullopt;
  // Fix the coordinate along which the line is not parallel to 0 and solve
  // the remaining 2x2 system by Cramer's rule.
  int k = first_nonzero(dir);
  int i = (k + 1) % 3, j = (k + 2) % 3;
  Vec3 nh = h.normal(), ng = g.normal();
  Rational det = nh[i] * ng[j] - nh[j] * ng[i];
  Vec3 p{Rational(0), Rational(0), Rational(0)};
  p[i] = (-h.d() * ng[j] + g.d() * nh[j]) / det;
  p[j] = (-g.d() * nh[i] + h.d() * ng[i]) / det;
  return Line3(Point3::from_vec(p), dir);
}

// --- lifting -------------------------------------------------------------

Point3 lift_point(const Point2& q) { return {q.x, q.y, q.x * q.x + q.y * q.y}; }

Plane lift_circle(const Circle2& c) {
  if (c.radius_squared.sign() <= 0) throw InputError("circle radius squared must be positive");
  // z - 2a x - 2b y - (r^2 - a^2 - b^2) = 0
  return Plane(-2 * c.cx, -2 * c.cy, Rational(1),
               -(c.radius_squared - c.cx * c.cx - c.cy * c.cy));
}

bool point_on_circle(const Point2& q, const Circle2& c) {
  Rational dx = q.x - c.cx, dy = q.y - c.cy;
  return dx * dx + dy * dy == c.radius_squared;
}

// --- duality -------------------------------------------------------------

Plane dualize_point(const Point3& p) { return Plane(p.x, p.y, Rational(-1), -p.z); }

Point3 dualize_plane(const Plane& h) {
  if (h.c().is_zero()) throw InputError("cannot dualize a vertical plane; apply generic_rotation first");
  // a x + b y + c z + d = 0  <=>  z = (-a/c) x + (-b/c) y - (d/c)
  return {-h.a() / h.c(), -h.b() / h.c(), h.d() / h.c()};
}

// --- frames --------------------------------------------------------------

Matrix3 Matrix3::identity() {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = Rational(i == j ? 1 : 0);
  return r;
}

Vec3 Matrix3::operator*(const Vec3& v) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z;
  return r;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
  return r;
}

Matrix3 Matrix3::transposed() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Rational Matrix3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Point3 Frame::apply(const Point3& p) const { return Point3::from_vec(forward * p.as_vec()); }

Plane Frame::apply(const Plane& h) const {
  // n . x + d = 0 with x = inverse * x'  =>  (inverse^T n) . x' + d = 0
  Vec3 n = inverse.transposed() * h.normal();
  return Plane(n.x, n.y, n.z, h.d());
}

Frame generic_rotation(std::uint64_t seed) {
  Frame f{Matrix3::identity(), Matrix3::identity()};
  if (seed == 0) return f;
  Rng rng(seed);
  // Six shears cycling through every off-diagonal slot.
  constexpr int slots[6][2] = {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}};
  for (const auto& slot : slots) {
    Rational s = rng.nonzero_rational(7, 5);
    Matrix3 shear = Matrix3::identity();
    Matrix3 unshear = Matrix3::identity();
    shear.m[slot[0]][slot[1]] = s;
    unshear.m[slot[0]][slot[1]] = -s;
    f.forward = shear * f.forward;
    f.inverse = f.inverse * unshear;
  }
  return f;
}

}  // namespace quadinc
