#include "quadinc/quadric.hpp"

#include "quadinc/errors.hpp"

#include <string>

namespace quadinc {

namespace {

constexpr std::pair<QuadricKind, std::string_view> kKindNames[] = {
    {QuadricKind::Reducible, "reducible"},
    {QuadricKind::Linear, "linear"},
    {QuadricKind::Cone, "cone"},
    {QuadricKind::DoublyRuled, "doubly-ruled-nondegenerate"},
    {QuadricKind::NonRuled, "non-ruled-nondegenerate"},
    {QuadricKind::CylinderOrOtherRank3, "cylinder-or-other-rank3"},
};

RationalMatrix to_dynamic(const Matrix4& q, int size) {
  RationalMatrix m(size, std::vector<Rational>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m[i][j] = q[i][j];
  return m;
}

}  // namespace

std::string_view to_string(QuadricKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

QuadricKind parse_quadric_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw InputError("unknown quadric classification \"" + std::string(name) + "\"");
}

QuadricClassification classify_quadric(const Matrix4& q) {
  bool all_zero = true;
  for (const auto& row : q)
    for (const auto& e : row) all_zero = all_zero && e.is_zero();
  if (all_zero) throw InputError("zero quadric matrix");

  QuadricClassification out{QuadricKind::Reducible, std::nullopt, 0, 0, {}};
  RationalMatrix full = to_dynamic(q, 4);
  RationalMatrix quad = to_dynamic(q, 3);
  out.rank = matrix_rank(full);
  out.quadratic_rank = matrix_rank(quad);
  out.inertia = symmetric_inertia(full);

  if (out.quadratic_rank == 0) {
    out.kind = QuadricKind::Linear;
    return out;
  }
  if (out.rank <= 2) {
    out.kind = QuadricKind::Reducible;
    return out;
  }
  if (out.rank == 3) {
    out.kind = QuadricKind::CylinderOrOtherRank3;
    if (out.quadratic_rank == 3) {
      Inertia a = symmetric_inertia(quad);
      // A definite quadratic part gives an imaginary cone (a single real
      // point); only the indefinite case is a real surface.
      if (a.positive > 0 && a.negative > 0) {
        auto apex = solve_linear(quad, {-q[0][3], -q[1][3], -q[2][3]});
        out.kind = QuadricKind::Cone;
        out.apex = Point3{(*apex)[0], (*apex)[1], (*apex)[2]};
      }
    }
    return out;
  }
  out.kind = (out.inertia.positive == 2 && out.inertia.negative == 2) ? QuadricKind::DoublyRuled
                                                                       : QuadricKind::NonRuled;
  return out;
}

Quadric::Quadric(const Matrix4& q) : q_(q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (q_[i][j] != q_[j][i]) throw InputError("quadric matrix is not symmetric");
  info_ = classify_quadric(q_);
}

Quadric Quadric::from_coefficients(const QuadricCoefficients& c) {
  const Rational half = make_rational(1, 2);
  Matrix4 q;
  q[0] = {c.xx, c.xy * half, c.xz * half, c.x * half};
  q[1] = {c.xy * half, c.yy, c.yz * half, c.y * half};
  q[2] = {c.xz * half, c.yz * half, c.zz, c.z * half};
  q[3] = {c.x * half, c.y * half, c.z * half, c.c};
  return Quadric(q);
}

Quadric Quadric::hyperbolic_paraboloid() {
  QuadricCoefficients c{};
  c.xy = 1;
  c.z = -1;
  return from_coefficients(c);
}

Quadric Quadric::paraboloid() {
  QuadricCoefficients c{};
  c.xx = 1;
  c.yy = 1;
  c.z = -1;
  return from_coefficients(c);
}

Quadric Quadric::unit_sphere() {
  QuadricCoefficients c{};
  c.xx = 1;
  c.yy = 1;
  c.zz = 1;
  c.c = -1;
  return from_coefficients(c);
}

Quadric Quadric::standard_cone() {
  QuadricCoefficients c{};
  c.xx = 1;
  c.yy = 1;
  c.zz = -1;
  return from_coefficients(c);
}

Quadric Quadric::one_sheet_hyperboloid() {
  QuadricCoefficients c{};
  c.xx = 1;
  c.yy = 1;
  c.zz = -1;
  c.c = -1;
  return from_coefficients(c);
}

Rational Quadric::evaluate(const Point3& p) const {
  const Rational* v[4] = {&p.x, &p.y, &p.z, nullptr};
  Rational total(0);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      if (q_[i][j].is_zero()) continue;
      Rational term = q_[i][j];
      if (v[i]) term *= *v[i];
      if (v[j]) term *= *v[j];
      total += (i == j) ? term : term * 2;
    }
  }
  return total;
}

Vec3 Quadric::half_gradient(const Point3& p) const {
  Vec3 g;
  for (int i = 0; i < 3; ++i) g[i] = q_[i][0] * p.x + q_[i][1] * p.y + q_[i][2] * p.z + q_[i][3];
  return g;
}

Rational Quadric::quadratic_part(const Vec3& u, const Vec3& v) const {
  Rational total(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!q_[i][j].is_zero()) total += u[i] * q_[i][j] * v[j];
  return total;
}

bool point_on_quadric(const Point3& p, const Quadric& v) { return v.evaluate(p).is_zero(); }

bool line_in_quadric(const Line3& line, const Quadric& v) {
  // F(b + t d) = F(b) + 2 t (A b + c).d + t^2 d^T A d
  const Point3& b = line.base();
  const Vec3& d = line.direction();
  return v.quadratic_part(d, d).is_zero() && dot(v.half_gradient(b), d).is_zero() &&
         v.evaluate(b).is_zero();
}

}  // namespace quadinc
