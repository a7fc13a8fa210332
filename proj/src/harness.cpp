#include "quadinc/harness.hpp"

#include "quadinc/cross_ratio.hpp"
#include "quadinc/errors.hpp"
#include "quadinc/random.hpp"
#include "quadinc/rulings.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

namespace quadinc {

namespace {

constexpr std::pair<QuadricFamily, std::string_view> kFamilies[] = {
    {QuadricFamily::HyperbolicParaboloid, "hyperbolic-paraboloid"},
    {QuadricFamily::Paraboloid, "paraboloid"},
    {QuadricFamily::Sphere, "sphere"},
    {QuadricFamily::Cone, "cone"},
    {QuadricFamily::OneSheetHyperboloid, "one-sheet-hyperboloid"},
};

constexpr std::pair<PlaneStrategy, std::string_view> kStrategies[] = {
    {PlaneStrategy::ThroughTriples, "through-triples"},
    {PlaneStrategy::RulingPlanes, "ruling-planes"},
    {PlaneStrategy::Random, "random"},
    {PlaneStrategy::MobiusPlanes, "mobius-planes"},
};

// Fisher-Yates with the portable draw.
template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
}

std::vector<Rational> draw_pool(Rng& rng, std::size_t size, const InstanceSpec& spec, bool nonzero) {
  std::set<Rational> seen;
  std::vector<Rational> pool;
  std::size_t attempts = 0;
  while (pool.size() < size) {
    if (++attempts > 100 * size + 1000)
      throw InputError("cannot draw " + std::to_string(size) + " distinct parameters within the rational bounds");
    Rational r = nonzero ? rng.nonzero_rational(spec.num_bound, spec.den_bound)
                         : rng.rational(spec.num_bound, spec.den_bound);
    if (seen.insert(r).second) pool.push_back(r);
  }
  return pool;
}

Point3 parametrize(QuadricFamily f, const Rational& u, const Rational& v) {
  const Rational one(1), two(2);
  switch (f) {
    case QuadricFamily::HyperbolicParaboloid:
      return {u, v, u * v};
    case QuadricFamily::Paraboloid:
      return {u, v, u * u + v * v};
    case QuadricFamily::Sphere: {
      Rational s = u * u + v * v, den = s + one;
      return {two * u / den, two * v / den, (s - one) / den};
    }
    case QuadricFamily::Cone:  // u = s, v = t
      return {v * (one - u * u), v * two * u, v * (one + u * u)};
    case QuadricFamily::OneSheetHyperboloid: {  // u = w, v = t
      Rational den = one + u * u, c = (one - u * u) / den, s = two * u / den;
      return {c - v * s, s + v * c, v};
    }
  }
  throw InputError("unsupported quadric");
}

Plane random_plane(Rng& rng) {
  for (;;) {
    Rational a = rng.rational(5, 3), b = rng.rational(5, 3), c = rng.rational(5, 3), d = rng.rational(5, 3);
    if (!(a.is_zero() && b.is_zero() && c.is_zero())) return Plane(a, b, c, d);
  }
}

Vec3 random_vec(Rng& rng) { return {rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)}; }

Mobius random_mobius(Rng& rng, const InstanceSpec& spec) {
  for (;;) {
    Rational alpha = rng.rational(spec.num_bound, spec.den_bound);
    Rational beta = rng.rational(spec.num_bound, spec.den_bound);
    Rational delta = rng.rational(spec.num_bound, spec.den_bound);
    if (beta != alpha * delta) return Mobius(alpha, beta, delta);
  }
}

}  // namespace

std::string_view to_string(QuadricFamily f) {
  for (const auto& [value, name] : kFamilies)
    if (value == f) return name;
  return "unknown";
}

std::string_view to_string(PlaneStrategy s) {
  for (const auto& [value, name] : kStrategies)
    if (value == s) return name;
  return "unknown";
}

QuadricFamily parse_quadric_family(std::string_view name) {
  for (const auto& [value, n] : kFamilies)
    if (n == name) return value;
  throw InputError("unknown quadric kind '" + std::string(name) + "'");
}

PlaneStrategy parse_plane_strategy(std::string_view name) {
  for (const auto& [value, n] : kStrategies)
    if (n == name) return value;
  throw InputError("unknown plane strategy '" + std::string(name) + "'");
}

Quadric quadric_of(QuadricFamily f) {
  switch (f) {
    case QuadricFamily::HyperbolicParaboloid: return Quadric::hyperbolic_paraboloid();
    case QuadricFamily::Paraboloid: return Quadric::paraboloid();
    case QuadricFamily::Sphere: return Quadric::unit_sphere();
    case QuadricFamily::Cone: return Quadric::standard_cone();
    case QuadricFamily::OneSheetHyperboloid: return Quadric::one_sheet_hyperboloid();
  }
  throw InputError("unsupported quadric");
}

bool is_ruled(QuadricFamily f) { return f != QuadricFamily::Paraboloid && f != QuadricFamily::Sphere; }

void validate(const InstanceSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw InputError("instance needs m >= 1 and n >= 1");
  if (spec.num_bound < 1 || spec.den_bound < 1) throw InputError("rational bounds must be positive");
  if (spec.strategy == PlaneStrategy::RulingPlanes && !is_ruled(spec.family))
    throw InputError("ruling-planes needs a ruled quadric, got " + std::string(to_string(spec.family)));
}

Json to_json(const InstanceSpec& spec) {
  return {{"quadric", std::string(to_string(spec.family))},
          {"m", spec.m},
          {"n", spec.n},
          {"strategy", std::string(to_string(spec.strategy))},
          {"seed", spec.seed},
          {"num_bound", spec.num_bound},
          {"den_bound", spec.den_bound}};
}

InstanceSpec instance_spec_from_json(const Json& j) {
  try {
    InstanceSpec s;
    s.family = parse_quadric_family(j.at("quadric").get<std::string>());
    s.m = j.at("m").get<std::size_t>();
    s.n = j.at("n").get<std::size_t>();
    s.strategy = parse_plane_strategy(j.at("strategy").get<std::string>());
    s.seed = j.value("seed", std::uint64_t{0});
    s.num_bound = j.value("num_bound", s.num_bound);
    s.den_bound = j.value("den_bound", s.den_bound);
    validate(s);
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed instance spec: ") + e.what());
  }
}

std::vector<InstanceSpec> instance_specs_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("experiment config must be a JSON list of instance specs");
  std::vector<InstanceSpec> out;
  for (const Json& e : j) out.push_back(instance_spec_from_json(e));
  return out;
}

std::vector<Point3> gen_points_on_quadric(const InstanceSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  std::vector<Point3> points;
  std::set<Point3> seen;
  if (spec.family == QuadricFamily::Cone && rng.coin()) {
    points.push_back({Rational(0), Rational(0), Rational(0)});
    seen.insert(points.back());
  }
  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(spec.m)))) + 1;
  // The second cone parameter scales the ruling and must not hit the apex.
  std::vector<Rational> us = draw_pool(rng, side, spec, false);
  std::vector<Rational> vs = draw_pool(rng, side, spec, spec.family == QuadricFamily::Cone);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b) pairs.emplace_back(a, b);
  shuffle(pairs, rng);
  for (const auto& [a, b] : pairs) {
    if (points.size() == spec.m) break;
    Point3 p = parametrize(spec.family, us[a], vs[b]);
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  if (points.size() < spec.m) throw InputError("parameter pools exhausted before reaching m points");
  return points;
}

std::vector<Plane> gen_planes(const InstanceSpec& spec, std::span<const Point3> points) {
  validate(spec);
  Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  const Quadric v = quadric_of(spec.family);
  const auto pick = [&] { return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(points.size()) - 1)); };

  // Rational rulings through each non-apex point, for ruling-planes.
  std::vector<std::pair<std::size_t, Line3>> rulings;
  if (spec.strategy == PlaneStrategy::RulingPlanes) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      PointRulings r = lines_through_point(points[i], v);
      for (const Line3& line : r.lines) rulings.emplace_back(i, line);
    }
    if (rulings.empty()) throw InputError("no rational rulings through the generated points");
  }

  std::vector<Plane> planes;
  std::set<Plane> seen;
  std::size_t attempts = 0;
  while (planes.size() < spec.n) {
    if (++attempts > 100 * spec.n + 1000) throw InputError("plane generation exhausted its resampling budget");
    std::optional<Plane> h;
    switch (spec.strategy) {
      case PlaneStrategy::ThroughTriples: {
        if (points.size() < 3) throw InputError("through-triples needs at least 3 points");
        std::size_t a = pick(), b = pick(), c = pick();
        if (a == b || b == c || a == c || collinear(points[a], points[b], points[c])) continue;
        h = Plane::through(points[a], points[b], points[c]);
        // Few points have few triples; fall back to a plane through a pair.
        if (seen.count(*h)) {
          Point3 off = points[a] + random_vec(rng);
          if (collinear(points[a], points[b], off)) continue;
          h = Plane::through(points[a], points[b], off);
        }
        break;
      }
      case PlaneStrategy::RulingPlanes: {
        const auto& [i, line] = rulings[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(rulings.size()) - 1))];
        const Point3& q = points[pick()];
        if (rng.coin() && !line.contains(q)) {
          h = Plane::through(line.base(), line.at(Rational(1)), q);
        } else {
          Vec3 normal = cross(line.direction(), random_vec(rng));
          if (normal.is_zero()) continue;
          h = Plane::with_normal(normal, line.base());
        }
        break;
      }
      case PlaneStrategy::Random:
        h = random_plane(rng);
        break;
      case PlaneStrategy::MobiusPlanes: {
        // On z = xy, half of the planes are fitted through three grid points.
        if (spec.family == QuadricFamily::HyperbolicParaboloid && points.size() >= 3 && rng.coin()) {
          std::size_t a = pick(), b = pick(), c = pick();
          const Point3 *pa = &points[a], *pb = &points[b], *pc = &points[c];
          if (pa->x == pb->x || pa->x == pc->x || pb->x == pc->x || pa->y == pb->y || pa->y == pc->y ||
              pb->y == pc->y)
            continue;
          std::array<std::pair<Rational, Rational>, 3> pairs{
              {{pa->x, pa->y}, {pb->x, pb->y}, {pc->x, pc->y}}};
          auto fit = mobius_from_pairs(pairs);
          if (!std::holds_alternative<Mobius>(fit)) continue;
          h = plane_of_mobius(std::get<Mobius>(fit));
        } else {
          h = plane_of_mobius(random_mobius(rng, spec));
        }
        break;
      }
    }
    if (h && seen.insert(*h).second) planes.push_back(*h);
  }
  return planes;
}

GeneratedInstance generate(const InstanceSpec& spec) {
  GeneratedInstance g{spec, quadric_of(spec.family), gen_points_on_quadric(spec), {}};
  g.planes = gen_planes(spec, g.points);
  return g;
}

// --- experiments -----------------------------------------------------------

bool ExperimentReport::all_passed() const { return audit_failures() == 0; }

std::size_t ExperimentReport::audit_failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ExperimentRow& r) { return !r.error && !r.audit.passed(); }));
}

std::size_t ExperimentReport::errors() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ExperimentRow& r) { return r.error.has_value(); }));
}

Decimal ExperimentReport::max_ratio() const {
  Decimal best(0);
  for (const auto& r : rows)
    if (!r.error && r.bounds.ratio > best) best = r.bounds.ratio;
  return best;
}

namespace {

ExperimentRow run_row(std::size_t index, const InstanceSpec& spec, const ExperimentOptions& options) {
  ExperimentRow row;
  row.spec = spec;
  try {
    GeneratedInstance g = generate(spec);
    IncidenceGraph graph = incidence_graph(g.points, g.planes);
    Decomposition d = decompose(g.points, g.planes, g.quadric, graph);
    row.audit = audit_decomposition(g.points, g.planes, g.quadric, graph, d, options.audit);
    row.bounds = bound_report(g.points.size(), g.planes.size(), graph, d);
    row.line_count = build_L(g.points, g.quadric).size();
    row.factor_count = d.factors.size();
    row.apex_incidences = d.apex_incidences.size();
    if (!row.audit.passed() && options.failure_dir) {
      std::filesystem::create_directories(*options.failure_dir);
      auto path = *options.failure_dir / ("failure_" + std::to_string(index) + ".json");
      Json j{{"spec", to_json(spec)},
             {"instance", to_json(Instance{g.points, g.planes, g.quadric})},
             {"decomposition", to_json(d)},
             {"audit", row.audit.summary()}};
      write_text_file(path, dump(j));
      row.failure_file = path;
    }
  } catch (const InputError& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

ExperimentReport run_experiment(std::span<const InstanceSpec> specs, const ExperimentOptions& options) {
  ExperimentReport report;
  report.rows.resize(specs.size());
  if (options.workers <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) report.rows[i] = run_row(i, specs[i], options);
    return report;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < options.workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) report.rows[i] = run_row(i, specs[i], options);
      });
  }
  return report;
}

std::vector<InstanceSpec> sweep_specs(std::size_t count, std::uint64_t seed, std::size_t min_size,
                                      std::size_t max_size) {
  if (min_size < 1 || max_size < min_size) throw InputError("sweep needs 1 <= min_size <= max_size");
  Rng rng(seed);
  std::vector<InstanceSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    InstanceSpec s;
    s.family = kFamilies[i % 5].first;
    std::vector<PlaneStrategy> compatible;
    for (const auto& [strategy, name] : kStrategies)
      if (strategy != PlaneStrategy::RulingPlanes || is_ruled(s.family)) compatible.push_back(strategy);
    s.strategy = compatible[(i / 5) % compatible.size()];
    s.m = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(min_size), static_cast<std::int64_t>(max_size)));
    s.n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(min_size), static_cast<std::int64_t>(max_size)));
    s.seed = rng.next();
    if (s.strategy == PlaneStrategy::ThroughTriples) s.m = std::max<std::size_t>(s.m, 3);
    out.push_back(s);
  }
  return out;
}

std::string experiment_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "index,quadric,strategy,seed," << bound_report_csv_header() << ",lines,factors,apex_incidences,status\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ExperimentRow& r = report.rows[i];
    out << i << ',' << to_string(r.spec.family) << ',' << to_string(r.spec.strategy) << ',' << r.spec.seed << ',';
    if (r.error) {
      out << r.spec.m << ',' << r.spec.n << ",,,,,,,,,,error\n";
      continue;
    }
    out << bound_report_csv_row(r.bounds) << ',' << r.line_count << ',' << r.factor_count << ','
        << r.apex_incidences << ',';
    if (r.audit.passed()) {
      out << "pass\n";
    } else {
      out << "fail";
      for (const auto& c : r.audit.checks)
        if (!c.passed) out << ':' << c.name;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace quadinc
