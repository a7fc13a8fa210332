#pragma once

#include "quadinc/geometry.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace quadinc {

struct Edge {
  std::size_t point;
  std::size_t plane;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartite point-plane incidence graph with adjacency in both directions.
/// Edges are kept sorted by (point, plane).
class IncidenceGraph {
 public:
  IncidenceGraph(std::size_t point_count, std::size_t plane_count, std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  std::size_t point_count() const { return point_adj_.size(); }
  std::size_t plane_count() const { return plane_adj_.size(); }

  /// Indices of the points on plane j, ascending.
  const std::vector<std::size_t>& points_on(std::size_t plane) const { return plane_adj_[plane]; }
  /// Indices of the planes through point i, ascending.
  const std::vector<std::size_t>& planes_through(std::size_t point) const { return point_adj_[point]; }

  bool contains(const Edge& e) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> point_adj_;
  std::vector<std::vector<std::size_t>> plane_adj_;
};

/// Throws InputError naming the first repeated element.
void require_distinct(std::span<const Point3> points);
void require_distinct(std::span<const Plane> planes);

/// Exact m x n sweep. Inputs must be free of duplicates. The result does not
/// depend on `workers`.
IncidenceGraph incidence_graph(std::span<const Point3> points, std::span<const Plane> planes,
                               unsigned workers = 1);

/// k -> number of planes containing exactly k points (k = 0 included).
using RichnessHistogram = std::map<std::size_t, std::size_t>;
RichnessHistogram richness_histogram(const IncidenceGraph& graph);

enum class PlaneClass { Sparse, Degenerate, NonDegenerate };

/// Planes with <= 2 points are sparse; otherwise degenerate iff all of their
/// points are collinear.
std::vector<PlaneClass> classify_degenerate_planes(std::span<const Point3> points,
                                                   std::span<const Plane> planes,
                                                   const IncidenceGraph& graph);

/// Planes with at least k incident points, by decreasing degree (ties by
/// index). Throws InputError when k < 1.
std::vector<std::size_t> rich_planes(const IncidenceGraph& graph, std::size_t k);

/// "point_index,plane_index" header, one edge per line, lexicographic.
std::string graph_to_csv(const IncidenceGraph& graph);

}  // namespace quadinc
