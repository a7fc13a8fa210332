#include "quadinc/incidence.hpp"

#include "quadinc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace quadinc {

IncidenceGraph::IncidenceGraph(std::size_t point_count, std::size_t plane_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), point_adj_(point_count), plane_adj_(plane_count) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    if (e.point >= point_count || e.plane >= plane_count) throw InputError("edge index out of range");
    point_adj_[e.point].push_back(e.plane);
    plane_adj_[e.plane].push_back(e.point);
  }
  // plane_adj_ is filled in point order, hence already ascending.
}

bool IncidenceGraph::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

template <class T>
void require_distinct_impl(std::span<const T> items, const char* what) {
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[a] < items[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (items[order[i]] == items[order[i - 1]]) {
      throw InputError(std::string("duplicate ") + what + ": indices " +
                       std::to_string(std::min(order[i], order[i - 1])) + " and " +
                       std::to_string(std::max(order[i], order[i - 1])));
    }
  }
}

// Integer forms for the sweep: points in homogeneous coordinates with a
// common denominator, planes with cleared denominators. When every entry fits
// in 62 bits the dot product is evaluated in 128-bit arithmetic, exactly.
constexpr std::int64_t kSmallLimit = std::int64_t(1) << 62;

struct IntegerForm {
  std::array<Integer, 4> big;
  std::array<std::int64_t, 4> small{};
  bool fits = true;
};

IntegerForm make_form(const std::array<const Rational*, 4>& entries) {
  IntegerForm f;
  Integer den(1);
  for (const Rational* r : entries) den = lcm(den, denominator_of(*r));
  for (int i = 0; i < 4; ++i) {
    f.big[i] = numerator_of(*entries[i]) * (den / denominator_of(*entries[i]));
    if (f.big[i] >= kSmallLimit || f.big[i] <= -kSmallLimit)
      f.fits = false;
    else
      f.small[i] = f.big[i].convert_to<std::int64_t>();
  }
  return f;
}

bool incident(const IntegerForm& p, const IntegerForm& h) {
  if (p.fits && h.fits) {
    __int128 s = 0;
    for (int i = 0; i < 4; ++i) s += static_cast<__int128>(p.small[i]) * h.small[i];
    return s == 0;
  }
  Integer s(0);
  for (int i = 0; i < 4; ++i) s += p.big[i] * h.big[i];
  return s == 0;
}

}  // namespace

void require_distinct(std::span<const Point3> points) { require_distinct_impl(points, "point"); }
void require_distinct(std::span<const Plane> planes) { require_distinct_impl(planes, "plane"); }

IncidenceGraph incidence_graph(std::span<const Point3> points, std::span<const Plane> planes, unsigned workers) {
  require_distinct(points);
  require_distinct(planes);
  const Rational one(1);
  std::vector<IntegerForm> pforms, hforms;
  pforms.reserve(points.size());
  hforms.reserve(planes.size());
  for (const auto& p : points) pforms.push_back(make_form({&p.x, &p.y, &p.z, &one}));
  for (const auto& h : planes) hforms.push_back(make_form({&h.a(), &h.b(), &h.c(), &h.d()}));

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, planes.size()))));
  std::vector<std::vector<Edge>> parts(workers);
  auto sweep = [&](unsigned w) {
    for (std::size_t j = w; j < planes.size(); j += workers)
      for (std::size_t i = 0; i < points.size(); ++i)
        if (incident(pforms[i], hforms[j])) parts[w].push_back({i, j});
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
  }
  std::vector<Edge> edges;
  for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
  return IncidenceGraph(points.size(), planes.size(), std::move(edges));
}

RichnessHistogram richness_histogram(const IncidenceGraph& graph) {
  RichnessHistogram hist;
  for (std::size_t j = 0; j < graph.plane_count(); ++j) ++hist[graph.points_on(j).size()];
  return hist;
}

std::vector<PlaneClass> classify_degenerate_planes(std::span<const Point3> points, std::span<const Plane> planes,
                                                   const IncidenceGraph& graph) {
  if (graph.point_count() != points.size() || graph.plane_count() != planes.size())
    throw InputError("incidence graph does not match the instance");
  std::vector<PlaneClass> out(planes.size(), PlaneClass::Sparse);
  for (std::size_t j = 0; j < planes.size(); ++j) {
    const auto& on = graph.points_on(j);
    if (on.size() <= 2) continue;
    // Collinear iff every point is collinear with the first two.
    const Point3& p = points[on[0]];
    const Point3& q = points[on[1]];
    bool all = true;
    for (std::size_t k = 2; k < on.size() && all; ++k) all = collinear(p, q, points[on[k]]);
    out[j] = all ? PlaneClass::Degenerate : PlaneClass::NonDegenerate;
  }
  return out;
}

std::vector<std::size_t> rich_planes(const IncidenceGraph& graph, std::size_t k) {
  if (k < 1) throw InputError("rich_planes needs k >= 1");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < graph.plane_count(); ++j)
    if (graph.points_on(j).size() >= k) out.push_back(j);
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return graph.points_on(a).size() > graph.points_on(b).size();
  });
  return out;
}

std::string graph_to_csv(const IncidenceGraph& graph) {
  std::string out = "point_index,plane_index\n";
  for (const Edge& e : graph.edges()) {
    out += std::to_string(e.point);
    out += ',';
    out += std::to_string(e.plane);
    out += '\n';
  }
  return out;
}

}  // namespace quadinc
