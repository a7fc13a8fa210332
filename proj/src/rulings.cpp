#include "quadinc/rulings.hpp"

#include "quadinc/errors.hpp"

#include <algorithm>

namespace quadinc {

namespace {

void require_curved(const Quadric& v) {
  if (v.kind() == QuadricKind::Reducible || v.kind() == QuadricKind::Linear)
    throw InputError(std::string("operation needs an irreducible nonlinear quadric, got ") +
                     std::string(to_string(v.kind())));
}

void sort_unique(std::vector<Line3>& lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
}

// Homogeneous 4-vector (w, last).
struct Hom {
  Vec3 w;
  Rational last;
};

Rational bilinear(const Matrix4& q, const Hom& x, const Hom& y) {
  const Rational* xs[4] = {&x.w.x, &x.w.y, &x.w.z, &x.last};
  const Rational* ys[4] = {&y.w.x, &y.w.y, &y.w.z, &y.last};
  Rational total(0);
  for (int i = 0; i < 4; ++i) {
    if (xs[i]->is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (q[i][j].is_zero() || ys[j]->is_zero()) continue;
      total += *xs[i] * q[i][j] * *ys[j];
    }
  }
  return total;
}

}  // namespace

PointRulings lines_through_point(const Point3& p, const Quadric& v) {
  require_curved(v);
  if (!point_on_quadric(p, v)) throw InputError("lines_through_point: point is not on the quadric");
  PointRulings out;
  Vec3 g = v.half_gradient(p);
  if (g.is_zero()) {
    // Singular point. For a real cone it is the apex; otherwise (imaginary
    // cone) it is an isolated real point carrying no lines.
    out.apex = v.kind() == QuadricKind::Cone;
    return out;
  }
  // Directions in the tangent plane: d = s u + t w with q(s, t) = 0.
  auto [u, w] = Plane::with_normal(g, p).spanning_directions();
  Rational a = v.quadratic_part(u, u);
  Rational b = v.quadratic_part(u, w);
  Rational c = v.quadratic_part(w, w);
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw InputError("quadric contains its tangent plane; it is reducible");
  Rational disc = b * b - a * c;
  std::vector<Vec3> dirs;
  if (disc.sign() == 0) {
    dirs.push_back(a.is_zero() ? u : u * (-b) + w * a);
  } else if (disc.sign() > 0) {
    Rational root;
    if (!rational_sqrt(disc, root)) {
      out.irrational = 2;
    } else if (a.is_zero()) {
      dirs.push_back(u);
      dirs.push_back(u * (-c) + w * (2 * b));
    } else {
      dirs.push_back(u * (-b + root) + w * a);
      dirs.push_back(u * (-b - root) + w * a);
    }
  }
  for (const Vec3& d : dirs) out.lines.emplace_back(p, d);
  sort_unique(out.lines);
  return out;
}

PlaneSection lines_in_plane_section(const Plane& h, const Quadric& v) {
  require_curved(v);
  const Point3 o = h.some_point();
  const auto [u, w] = h.spanning_directions();
  const Matrix4& q = v.matrix();
  const Hom hu{u, Rational(0)}, hw{w, Rational(0)}, ho{o.as_vec(), Rational(1)};
  // Conic a s^2 + 2b st + c t^2 + 2e s + 2f t + g = 0 in plane coordinates
  // (s, t) -> o + s u + t w.
  const Rational a = bilinear(q, hu, hu), b = bilinear(q, hu, hw), c = bilinear(q, hw, hw);
  const Rational e = bilinear(q, hu, ho), f = bilinear(q, hw, ho), g = bilinear(q, ho, ho);

  auto at = [&](const Rational& s, const Rational& t) { return o + u * s + w * t; };
  auto along = [&](const Rational& s, const Rational& t) { return u * s + w * t; };

  PlaneSection out;
  if (a.is_zero() && b.is_zero() && c.is_zero()) {
    if (e.is_zero() && f.is_zero()) {
      if (g.is_zero()) throw InputError("plane is contained in the quadric; it is reducible");
      out.kind = SectionKind::Empty;
      return out;
    }
    // 2e s + 2f t + g = 0
    out.kind = SectionKind::SingleLine;
    out.line_count = 1;
    if (!e.is_zero())
      out.lines.emplace_back(at(-g / (2 * e), Rational(0)), along(-f, e));
    else
      out.lines.emplace_back(at(Rational(0), -g / (2 * f)), along(Rational(1), Rational(0)));
    return out;
  }

  const Rational det2 = a * c - b * b;
  if (!det2.is_zero()) {
    // Central conic; the center solves [a b; b c] (s, t) = -(e, f).
    const Rational cs = (-e * c + f * b) / det2;
    const Rational ct = (-f * a + e * b) / det2;
    const Rational value = g + e * cs + f * ct;
    if (!value.is_zero()) {
      // Rank 3: ellipse, hyperbola, or an empty imaginary ellipse.
      bool real = det2.sign() < 0 || (a.sign() * value.sign() < 0);
      out.kind = real ? SectionKind::NondegenerateConic : SectionKind::Empty;
      return out;
    }
    if (det2.sign() > 0) {
      out.kind = SectionKind::IsolatedPoint;
      out.isolated_point = at(cs, ct);
      return out;
    }
    out.kind = SectionKind::IntersectingLines;
    out.line_count = 2;
    Rational root;
    const Rational disc = -det2;
    if (rational_sqrt(disc, root)) {
      const Point3 center = at(cs, ct);
      if (!a.is_zero()) {
        out.lines.emplace_back(center, along(-b + root, a));
        out.lines.emplace_back(center, along(-b - root, a));
      } else {
        out.lines.emplace_back(center, along(Rational(1), Rational(0)));
        out.lines.emplace_back(center, along(-c, 2 * b));
      }
      sort_unique(out.lines);
    }
    return out;
  }

  // Quadratic part of rank 1: lambda * l(s, t)^2 with l = s + (b/a) t, or
  // l = t when a == 0.
  const bool s_led = !a.is_zero();
  const Rational lambda = s_led ? a : c;
  const Rational lt = s_led ? b / a : Rational(1);  // l = s + lt t, or t
  // Kernel direction of l; the linear part 2e s + 2f t must vanish on it for
  // the conic to be degenerate, else it is a parabola.
  const Rational ks = s_led ? -lt : Rational(1);
  const Rational kt = s_led ? Rational(1) : Rational(0);
  if (!(e * ks + f * kt).is_zero()) {
    out.kind = SectionKind::NondegenerateConic;
    return out;
  }
  const Rational mu = s_led ? 2 * e : 2 * f;  // linear part = mu * l
  // lambda l^2 + mu l + g = 0
  const Rational disc = mu * mu - 4 * lambda * g;
  auto line_at = [&](const Rational& level) {
    // Points with l(s, t) = level.
    Point3 base = s_led ? at(level, Rational(0)) : at(Rational(0), level);
    return Line3(base, along(ks, kt));
  };
  if (disc.sign() < 0) {
    out.kind = SectionKind::Empty;
  } else if (disc.sign() == 0) {
    out.kind = SectionKind::DoubleLine;
    out.line_count = 1;
    out.lines.push_back(line_at(-mu / (2 * lambda)));
  } else {
    out.kind = SectionKind::ParallelLines;
    out.line_count = 2;
    Rational root;
    if (rational_sqrt(disc, root)) {
      out.lines.push_back(line_at((-mu + root) / (2 * lambda)));
      out.lines.push_back(line_at((-mu - root) / (2 * lambda)));
      sort_unique(out.lines);
    }
  }
  return out;
}

CurvePairIntersection curve_pair_intersections(const Plane& h, const Plane& g, const Quadric& v) {
  std::optional<Line3> line = plane_intersection(h, g);
  CurvePairIntersection out;
  if (!line) return out;
  const Point3& base = line->base();
  const Vec3& d = line->direction();
  // F(base + t d) = alpha t^2 + beta t + gamma
  const Rational alpha = v.quadratic_part(d, d);
  const Rational beta = 2 * dot(v.half_gradient(base), d);
  const Rational gamma = v.evaluate(base);
  if (alpha.is_zero()) {
    if (!beta.is_zero())
      out.count = 1;
    else
      out.infinite = gamma.is_zero();
    return out;
  }
  const int s = (beta * beta - 4 * alpha * gamma).sign();
  out.count = s < 0 ? 0 : (s == 0 ? 1 : 2);
  return out;
}

}  // namespace quadinc

namespace quadinc {

namespace {

template <std::size_t N>
std::array<Integer, N> clear_denominators(const std::array<Rational, N>& r) {
  Integer den(1);
  for (const Rational& x : r) den = lcm(den, denominator_of(x));
  std::array<Integer, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = numerator_of(r[i]) * (den / denominator_of(r[i]));
  return out;
}

}  // namespace

CurvePairCounter::CurvePairCounter(const Quadric& v, std::span<const Plane> planes) {
  std::array<Rational, 16> flat;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) flat[4 * i + j] = v.matrix()[i][j];
  auto q = clear_denominators(flat);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q_[i][j] = q[4 * i + j];
  planes_.reserve(planes.size());
  for (const Plane& h : planes) planes_.push_back(clear_denominators(std::array<Rational, 4>{h.a(), h.b(), h.c(), h.d()}));
}

CurvePairIntersection CurvePairCounter::count(std::size_t a, std::size_t b) const {
  const auto& h = planes_[a];
  const auto& g = planes_[b];
  // Direction of the common line.
  std::array<Integer, 4> d{h[1] * g[2] - h[2] * g[1], h[2] * g[0] - h[0] * g[2], h[0] * g[1] - h[1] * g[0],
                           Integer(0)};
  int k = d[0] != 0 ? 0 : (d[1] != 0 ? 1 : (d[2] != 0 ? 2 : -1));
  if (k < 0) {
    bool same = true;
    for (int i = 0; i < 4 && same; ++i)
      for (int j = i + 1; j < 4 && same; ++j) same = h[i] * g[j] == h[j] * g[i];
    if (same) throw InputError("intersection of identical planes");
    return {};
  }
  // Homogeneous point X = (P, den) of the line with P[k] = 0, by Cramer.
  const int i = (k + 1) % 3, j = (k + 2) % 3;
  std::array<Integer, 4> x;
  x[k] = 0;
  x[i] = -h[3] * g[j] + g[3] * h[j];
  x[j] = -g[3] * h[i] + h[3] * g[i];
  x[3] = h[i] * g[j] - h[j] * g[i];
  // F((P + s d) / den) den^2 = alpha s^2 + beta s + gamma.
  auto form = [&](const std::array<Integer, 4>& u, const std::array<Integer, 4>& w) {
    Integer sum(0);
    for (int r = 0; r < 4; ++r) {
      if (u[r] == 0) continue;
      Integer row(0);
      for (int c = 0; c < 4; ++c)
        if (w[c] != 0 && q_[r][c] != 0) row += q_[r][c] * w[c];
      sum += u[r] * row;
    }
    return sum;
  };
  const Integer alpha = form(d, d), beta = 2 * form(d, x), gamma = form(x, x);
  CurvePairIntersection out;
  if (alpha == 0) {
    if (beta != 0)
      out.count = 1;
    else
      out.infinite = gamma == 0;
    return out;
  }
  const Integer disc = beta * beta - 4 * alpha * gamma;
  out.count = disc < 0 ? 0 : (disc == 0 ? 1 : 2);
  return out;
}

}  // namespace quadinc
