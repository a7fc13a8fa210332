#pragma once

// Lines of a quadric: through a point, inside a plane section, and the
// intersection count of two plane sections.

#include "quadinc/geometry.hpp"
#include "quadinc/quadric.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace quadinc {

struct PointRulings {
  /// p is a cone apex: every ruling passes through it.
  bool apex = false;
  /// Rational lines of V through p, canonical, ascending.
  std::vector<Line3> lines;
  /// Real lines of V through p whose directions are irrational.
  int irrational = 0;
};

/// Lines of V through p: directions d with d^T A d = 0 and (A p + b) . d = 0.
/// Throws InputError when p is not on V or V is reducible or linear.
PointRulings lines_through_point(const Point3& p, const Quadric& v);

enum class SectionKind {
  Empty,
  NondegenerateConic,  // ellipse, parabola, hyperbola
  IsolatedPoint,       // pair of complex lines meeting in one real point
  IntersectingLines,
  ParallelLines,
  DoubleLine,
  SingleLine,          // the plane meets V in one line (and at infinity)
};

struct PlaneSection {
  SectionKind kind = SectionKind::Empty;
  /// Number of distinct real lines, rational or not. Never exceeds 2.
  int line_count = 0;
  /// The rational ones, canonical, ascending.
  std::vector<Line3> lines;
  /// Set for SectionKind::IsolatedPoint.
  std::optional<Point3> isolated_point;
};

/// Exact analysis of the conic h ∩ V. Throws InputError when h ⊂ V
/// (V reducible).
PlaneSection lines_in_plane_section(const Plane& h, const Quadric& v);

struct CurvePairIntersection {
  int count = 0;
  /// The line h ∩ g lies in V.
  bool infinite = false;
};

/// Number of real points of V on the line h ∩ g (0 for parallel planes).
/// Throws InputError when h == g.
CurvePairIntersection curve_pair_intersections(const Plane& h, const Plane& g, const Quadric& v);

/// curve_pair_intersections for many pairs drawn from one list of planes.
/// Planes and quadric are scaled to integers once, so each pair costs a few
/// integer products instead of a rational line construction.
class CurvePairCounter {
 public:
  CurvePairCounter(const Quadric& v, std::span<const Plane> planes);
  /// Throws InputError when the two planes are equal.
  CurvePairIntersection count(std::size_t a, std::size_t b) const;

 private:
  std::array<std::array<Integer, 4>, 4> q_;
  std::vector<std::array<Integer, 4>> planes_;
};

}  // namespace quadinc
