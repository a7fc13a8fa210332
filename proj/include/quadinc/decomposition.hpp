#pragma once

#include "quadinc/bounds.hpp"
#include "quadinc/incidence.hpp"
#include "quadinc/quadric.hpp"
#include "quadinc/rulings.hpp"
#include "quadinc/serialize.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quadinc {

/// The lines of V through at least one (non-apex) point of P.
struct LineSet {
  std::vector<Line3> lines;  // canonical, ascending
  /// For each point, indices into `lines` of the rational lines through it.
  std::vector<std::vector<std::size_t>> lines_through;
  /// Number of (point, irrational ruling) pairs that were left out.
  std::size_t irrational_ruling_count = 0;
  /// Index of the cone apex in P, when present.
  std::optional<std::size_t> apex_index;
};

/// Throws InputError when a point is off V or V is reducible or linear.
LineSet build_line_set(std::span<const Point3> points, const Quadric& v);
std::vector<Line3> build_L(std::span<const Point3> points, const Quadric& v);

/// One complete bipartite piece P_l x H_l.
struct LineFactor {
  Line3 line;
  std::vector<std::size_t> points;  // P_l, ascending
  std::vector<std::size_t> planes;  // H_l, ascending
};

struct Decomposition {
  std::vector<Edge> residual;  // G_0, sorted
  std::vector<LineFactor> factors;
  std::vector<Edge> apex_incidences;  // sorted

  std::size_t irrational_ruling_count = 0;
  /// Residual edges on planes meeting V in a single real point.
  std::size_t isolated_point_incidences = 0;

  std::size_t sum_points() const;    // sum |P_l|
  std::size_t sum_planes() const;    // sum |H_l|
  std::size_t sum_products() const;  // sum |P_l| |H_l|
};

/// V must be doubly ruled, non-ruled, or a cone; every point must lie on V.
/// Throws InputError otherwise.
Decomposition decompose(std::span<const Point3> points, std::span<const Plane> planes, const Quadric& v,
                        unsigned workers = 1);
Decomposition decompose(std::span<const Point3> points, std::span<const Plane> planes, const Quadric& v,
                        const IncidenceGraph& graph);

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool passed() const;
  std::string summary() const;  // failed checks, one per line
};

struct AuditOptions {
  /// The O(n^2) pairwise section check; can be skipped for very large n.
  bool pseudo_circle = true;
};

/// Re-derives every structural guarantee of a decomposition from scratch:
/// coverage, disjointness, factor soundness, residual purity against the full
/// line set, the 2m / 2n budgets, <= 2 lines per plane, no lines on non-ruled
/// quadrics, apex routing on cones, and the pseudo-circle property.
AuditReport audit_decomposition(std::span<const Point3> points, std::span<const Plane> planes, const Quadric& v,
                                const IncidenceGraph& graph, const Decomposition& d, AuditOptions options = {});

struct BoundReport {
  std::size_t m = 0, n = 0;
  std::size_t incidences = 0;
  std::size_t g0 = 0;
  std::size_t sum_pl = 0, sum_hl = 0, sum_products = 0;
  Decimal bound_quadric, bound_weak, bound_small_m;
  Decimal ratio;  // g0 / bound_quadric
};

BoundReport bound_report(std::size_t m, std::size_t n, const IncidenceGraph& graph, const Decomposition& d,
                         const Decimal& kappa = Decimal(1));

/// "m,n,G0,sumPl,sumHl,bound_quadric,bound_weak,ratio"
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundReport& r);

/// {"residual": [[i,j],...], "factors": [{"line", "points", "planes"}],
///  "apex_incidences": [[i,j],...], plus diagnostics}.
Json to_json(const Decomposition& d);
/// Throws InputError on malformed input.
Decomposition decomposition_from_json(const Json& j);

}  // namespace quadinc
