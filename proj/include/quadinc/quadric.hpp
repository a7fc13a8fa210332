#pragma once

#include "quadinc/geometry.hpp"
#include "quadinc/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace quadinc {

enum class QuadricKind {
  Reducible,    // rank <= 2: plane pairs, double planes, degenerate lines
  Linear,       // zero quadratic part
  Cone,         // real cone, with its apex
  DoublyRuled,  // hyperbolic paraboloid, one-sheet hyperboloid
  NonRuled,     // ellipsoid, elliptic paraboloid, two-sheet hyperboloid
  CylinderOrOtherRank3,
};

std::string_view to_string(QuadricKind kind);
/// Inverse of to_string. Throws InputError on unknown names.
QuadricKind parse_quadric_kind(std::string_view name);

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

struct QuadricClassification {
  QuadricKind kind;
  std::optional<Point3> apex;  // set iff kind == Cone
  int rank = 0;                // of the 4x4 form
  int quadratic_rank = 0;      // of the upper-left 3x3 block
  Inertia inertia;             // of the 4x4 form
};

/// Exact classification from ranks and signatures. Throws InputError for the
/// zero matrix.
QuadricClassification classify_quadric(const Matrix4& q);

/// Polynomial coefficients of
///   xx x^2 + yy y^2 + zz z^2 + xy xy + xz xz + yz yz + x x + y y + z z + c.
struct QuadricCoefficients {
  Rational xx, yy, zz, xy, xz, yz, x, y, z, c;
};

/// F(x, y, z) = (x, y, z, 1) Q (x, y, z, 1)^T with Q symmetric.
class Quadric {
 public:
  /// Throws InputError for non-symmetric or zero matrices.
  explicit Quadric(const Matrix4& q);
  static Quadric from_coefficients(const QuadricCoefficients& c);

  // The quadrics used throughout the tests and the generators.
  static Quadric hyperbolic_paraboloid();  // z = xy
  static Quadric paraboloid();             // z = x^2 + y^2
  static Quadric unit_sphere();            // x^2 + y^2 + z^2 = 1
  static Quadric standard_cone();          // x^2 + y^2 = z^2
  static Quadric one_sheet_hyperboloid();  // x^2 + y^2 - z^2 = 1

  const Matrix4& matrix() const { return q_; }
  const QuadricClassification& classification() const { return info_; }
  QuadricKind kind() const { return info_.kind; }
  const std::optional<Point3>& apex() const { return info_.apex; }

  Rational evaluate(const Point3& p) const;
  /// A p + b, half the gradient of F at p.
  Vec3 half_gradient(const Point3& p) const;
  /// u^T A v for the quadratic part A.
  Rational quadratic_part(const Vec3& u, const Vec3& v) const;

  friend bool operator==(const Quadric& a, const Quadric& b) { return a.q_ == b.q_; }

 private:
  Matrix4 q_;
  QuadricClassification info_;
};

bool point_on_quadric(const Point3& p, const Quadric& v);

/// True iff F(base + t direction) vanishes identically in t.
bool line_in_quadric(const Line3& line, const Quadric& v);

}  // namespace quadinc
