#pragma once

// Instance generators and experiment sweeps.
//
// Point parametrizations (u, v, s, t, w rational):
//   hyperbolic-paraboloid  (u, v, u v)
//   paraboloid             (u, v, u^2 + v^2)
//   sphere                 (2u, 2v, u^2 + v^2 - 1) / (u^2 + v^2 + 1)
//   cone                   t (1 - s^2, 2 s, 1 + s^2), apex optionally included
//   one-sheet-hyperboloid  (c - t s, s + t c, t), c = (1 - w^2)/(1 + w^2),
//                          s = 2w/(1 + w^2)
// Parameters are drawn from two small pools so that many points share a
// parameter and therefore, on ruled surfaces, a ruling.

#include "quadinc/decomposition.hpp"
#include "quadinc/quadric.hpp"
#include "quadinc/serialize.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadinc {

enum class QuadricFamily { HyperbolicParaboloid, Paraboloid, Sphere, Cone, OneSheetHyperboloid };
enum class PlaneStrategy { ThroughTriples, RulingPlanes, Random, MobiusPlanes };

std::string_view to_string(QuadricFamily f);
std::string_view to_string(PlaneStrategy s);
/// Throw InputError on unknown names.
QuadricFamily parse_quadric_family(std::string_view name);
PlaneStrategy parse_plane_strategy(std::string_view name);

Quadric quadric_of(QuadricFamily f);
bool is_ruled(QuadricFamily f);

struct InstanceSpec {
  QuadricFamily family = QuadricFamily::HyperbolicParaboloid;
  std::size_t m = 1;
  std::size_t n = 1;
  PlaneStrategy strategy = PlaneStrategy::ThroughTriples;
  std::uint64_t seed = 0;
  std::int64_t num_bound = 10000;
  std::int64_t den_bound = 1000;
};

/// Throws InputError for m or n of 0, nonpositive bounds, or ruling-planes
/// on a surface without lines.
void validate(const InstanceSpec& spec);

Json to_json(const InstanceSpec& spec);
InstanceSpec instance_spec_from_json(const Json& j);
std::vector<InstanceSpec> instance_specs_from_json(const Json& j);

/// Exactly spec.m distinct points on the quadric. Throws InputError if the
/// parameter pools cannot supply that many.
std::vector<Point3> gen_points_on_quadric(const InstanceSpec& spec);
/// Exactly spec.n distinct planes. Throws InputError when resampling is
/// exhausted.
std::vector<Plane> gen_planes(const InstanceSpec& spec, std::span<const Point3> points);

struct GeneratedInstance {
  InstanceSpec spec;
  Quadric quadric;
  std::vector<Point3> points;
  std::vector<Plane> planes;
};

GeneratedInstance generate(const InstanceSpec& spec);

struct ExperimentRow {
  InstanceSpec spec;
  /// Generator or decomposition error; the other fields are then unset.
  std::optional<std::string> error;
  BoundReport bounds;
  std::size_t line_count = 0;
  std::size_t factor_count = 0;
  std::size_t apex_incidences = 0;
  AuditReport audit;
  /// Written for failed audits when a failure directory was given.
  std::optional<std::filesystem::path> failure_file;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  bool all_passed() const;  // no audit failures (errors do not count)
  std::size_t audit_failures() const;
  std::size_t errors() const;
  /// Max of g0 / bound_quadric over rows without errors; 0 when there are none.
  Decimal max_ratio() const;
};

struct ExperimentOptions {
  std::optional<std::filesystem::path> failure_dir;
  unsigned workers = 1;
  AuditOptions audit;
};

/// Rows follow spec order.
ExperimentReport run_experiment(std::span<const InstanceSpec> specs, const ExperimentOptions& options = {});

/// A mixed sweep over every family and every compatible strategy, with m and
/// n drawn from [min_size, max_size].
std::vector<InstanceSpec> sweep_specs(std::size_t count, std::uint64_t seed, std::size_t min_size,
                                      std::size_t max_size);

/// "index,quadric,strategy,seed,m,n,G0,...,ratio,lines,factors,apex_incidences,status"
std::string experiment_csv(const ExperimentReport& report);

}  // namespace quadinc
