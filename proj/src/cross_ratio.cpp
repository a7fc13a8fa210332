#include "quadinc/cross_ratio.hpp"

#include "quadinc/errors.hpp"
#include "quadinc/incidence.hpp"
#include "quadinc/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>
#include <type_traits>

namespace quadinc {

namespace {

std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool contains_sorted(std::span<const Rational> sorted_set, const Rational& x) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

}  // namespace

Mobius::Mobius(Rational alpha, Rational beta, Rational delta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), delta_(std::move(delta)) {
  if (beta_ == alpha_ * delta_) throw InputError("constant transformation: beta == alpha * delta");
}

std::strong_ordering operator<=>(const Mobius& a, const Mobius& b) {
  if (auto c = compare(a.alpha_, b.alpha_); c != 0) return c;
  if (auto c = compare(a.beta_, b.beta_); c != 0) return c;
  return compare(a.delta_, b.delta_);
}

std::optional<Rational> mobius_apply(const Mobius& tau, const Rational& x) {
  Rational den = x + tau.delta();
  if (den.is_zero()) return std::nullopt;
  return (tau.alpha() * x + tau.beta()) / den;
}

std::variant<Mobius, Degenerate> mobius_from_pairs(std::span<const std::pair<Rational, Rational>, 3> pairs) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (pairs[i].first == pairs[j].first) throw InputError("mobius_from_pairs: sources must be distinct");
      if (pairs[i].second == pairs[j].second) throw InputError("mobius_from_pairs: targets must be distinct");
    }
  // unknowns (alpha, beta, delta): -a alpha - beta + b delta = -a b
  RationalMatrix m;
  std::vector<Rational> rhs;
  for (const auto& [a, b] : pairs) {
    m.push_back({-a, Rational(-1), b});
    rhs.push_back(-a * b);
  }
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) return Degenerate{Degenerate::Reason::Inconsistent};
  const Rational &alpha = (*sol)[0], &beta = (*sol)[1], &delta = (*sol)[2];
  if (beta == alpha * delta) return Degenerate{Degenerate::Reason::ConstantMap};
  return Mobius(alpha, beta, delta);
}

Plane plane_of_mobius(const Mobius& tau) { return Plane(-tau.alpha(), tau.delta(), Rational(1), -tau.beta()); }

std::size_t mobius_richness(const Mobius& tau, std::span<const Rational> sorted_set) {
  std::size_t r = 0;
  for (const Rational& a : sorted_set) {
    auto y = mobius_apply(tau, a);
    if (y && contains_sorted(sorted_set, *y)) ++r;
  }
  return r;
}

std::vector<Rational> normalized_set(std::span<const Rational> set) {
  std::vector<Rational> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end()) throw InputError("duplicate element " + to_string(*dup) + " in set");
  return out;
}

GridInstance grid_instance(std::span<const Rational> set) {
  GridInstance g;
  g.set = normalized_set(set);
  g.points.reserve(g.set.size() * g.set.size());
  for (const Rational& a : g.set)
    for (const Rational& b : g.set) g.points.push_back({a, b, a * b});
  return g;
}

std::vector<bool> grid_incidence_crosscheck(std::span<const Rational> set, std::span<const Mobius> taus) {
  GridInstance g = grid_instance(set);
  std::vector<Plane> planes;
  planes.reserve(taus.size());
  for (const Mobius& tau : taus) planes.push_back(plane_of_mobius(tau));
  IncidenceGraph graph = incidence_graph(g.points, planes);
  std::vector<bool> out(taus.size());
  for (std::size_t j = 0; j < taus.size(); ++j) {
    std::size_t on_plane = 0;
    for (std::size_t i : graph.points_on(j))
      if (g.points[i].x != taus[j].pole()) ++on_plane;
    out[j] = on_plane == mobius_richness(taus[j], g.set);
  }
  return out;
}

bool grid_incidence_crosscheck(std::span<const Rational> set, const Mobius& tau) {
  return grid_incidence_crosscheck(set, std::span<const Mobius>(&tau, 1))[0];
}

// --- enumeration ---------------------------------------------------------
//
// The set is scaled by the lcm c of its denominators; x -> c x conjugates a
// transformation (alpha, beta, delta) to (c alpha, c^2 beta, c delta), so
// richness is unchanged and all work happens on integers. Sets whose scaled
// entries stay below 2^18 use __int128, which then cannot overflow; larger
// ones fall back to GMP integers.

namespace {

using i128 = __int128;

struct Candidate {
  std::size_t richness;
  // alpha = -na / d, beta = nb / d, delta = nd / d on the scaled set.
  Integer na, nb, nd, d;
};

Integer to_integer(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<std::uint64_t>(u >> 64)), lo(static_cast<std::uint64_t>(u));
  Integer r = (hi << 64) + lo;
  return neg ? Integer(-r) : r;
}

Integer to_integer(const Integer& v) { return v; }

template <class T>
class Membership;

template <>
class Membership<i128> {
 public:
  explicit Membership(const std::vector<i128>& vals) : lo_(static_cast<std::int64_t>(vals.front())) {
    hi_ = static_cast<std::int64_t>(vals.back());
    bits_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), false);
    for (i128 v : vals) bits_[static_cast<std::size_t>(static_cast<std::int64_t>(v) - lo_)] = true;
  }
  // num / den in the set; den != 0. The double quotient only proposes an
  // integer, which is then checked exactly.
  bool contains(i128 num, i128 den) const {
    double q = static_cast<double>(num) / static_cast<double>(den);
    if (!(q > static_cast<double>(lo_) - 1.0 && q < static_cast<double>(hi_) + 1.0)) return false;
    std::int64_t qi = std::llround(q);
    if (qi < lo_ || qi > hi_ || !bits_[static_cast<std::size_t>(qi - lo_)]) return false;
    return num == static_cast<i128>(qi) * den;
  }

 private:
  std::int64_t lo_, hi_;
  std::vector<bool> bits_;
};

template <>
class Membership<Integer> {
 public:
  explicit Membership(const std::vector<Integer>& vals) : vals_(vals) {}
  bool contains(const Integer& num, const Integer& den) const {
    if (num % den != 0) return false;
    return std::binary_search(vals_.begin(), vals_.end(), Integer(num / den));
  }

 private:
  const std::vector<Integer>& vals_;
};

struct ChunkResult {
  std::vector<Candidate> kept;
  std::map<std::size_t, std::size_t> by_richness;
  std::uint64_t candidates = 0;
};

template <class T>
void enumerate_sources(const std::vector<T>& a, const Membership<T>& member, std::size_t first_index,
                       std::size_t k_min, std::size_t keep_min, ChunkResult& out) {
  const std::size_t n = a.size();
  const std::size_t i = first_index;
  for (std::size_t j = i + 1; j < n; ++j) {
    for (std::size_t l = j + 1; l < n; ++l) {
      const T u2 = a[j] - a[i], u3 = a[l] - a[i];
      for (std::size_t p = 0; p < n; ++p) {
        const T aibp = a[i] * a[p];
        for (std::size_t q = 0; q < n; ++q) {
          if (q == p) continue;
          const T v2 = a[q] - a[p];
          const T w2 = aibp - a[j] * a[q];
          for (std::size_t r = 0; r < n; ++r) {
            if (r == p || r == q) continue;
            const T v3 = a[r] - a[p];
            const T d = u2 * v3 - u3 * v2;
            if (d == 0) continue;
            const T w3 = aibp - a[l] * a[r];
            const T na = w2 * v3 - w3 * v2;
            const T nd = u2 * w3 - u3 * w2;
            const T nb = na * a[i] + nd * a[p] + aibp * d;
            if (nb * d == -(na * nd)) continue;  // constant map
            ++out.candidates;
            // Reported only from its three smallest rich sources.
            bool canonical = true;
            for (std::size_t s = 0; s < l && canonical; ++s) {
              if (s == i || s == j) continue;
              const T den = d * a[s] + nd;
              if (den != 0 && member.contains(nb - na * a[s], den)) canonical = false;
            }
            if (!canonical) continue;
            std::size_t rich = 3;
            for (std::size_t s = l + 1; s < n; ++s) {
              const T den = d * a[s] + nd;
              if (den != 0 && member.contains(nb - na * a[s], den)) ++rich;
            }
            if (rich < k_min) continue;
            ++out.by_richness[rich];
            if (rich >= keep_min)
              out.kept.push_back({rich, to_integer(na), to_integer(nb), to_integer(nd), to_integer(d)});
          }
        }
      }
    }
  }
}

template <class T>
std::vector<ChunkResult> enumerate_all(const std::vector<T>& a, std::size_t k_min, std::size_t keep_min,
                                       unsigned workers) {
  const std::size_t n = a.size();
  Membership<T> member(a);
  std::vector<ChunkResult> results(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i + 2 < n; ++i) enumerate_sources(a, member, i, k_min, keep_min, results[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i + 2 < n; i = next++) enumerate_sources(a, member, i, k_min, keep_min, results[i]);
      });
  }
  return results;
}

void enumerate_affine(std::span<const Rational> set, std::size_t k_min, std::vector<RichAffine>& out) {
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          if (p == q) continue;
          Rational alpha = (set[q] - set[p]) / (set[j] - set[i]);
          Rational beta = set[p] - alpha * set[i];
          bool canonical = true;
          for (std::size_t s = 0; s < j && canonical; ++s)
            if (s != i && contains_sorted(set, alpha * set[s] + beta)) canonical = false;
          if (!canonical) continue;
          std::size_t rich = 2;
          for (std::size_t s = j + 1; s < n; ++s)
            if (contains_sorted(set, alpha * set[s] + beta)) ++rich;
          if (rich >= k_min) out.push_back({AffineMap{alpha, beta}, rich});
        }
  std::sort(out.begin(), out.end(), [](const RichAffine& x, const RichAffine& y) {
    if (x.map.alpha != y.map.alpha) return x.map.alpha < y.map.alpha;
    return x.map.beta < y.map.beta;
  });
}

}  // namespace

RichTransformReport rich_transformations(std::span<const Rational> set, const RichTransformOptions& options) {
  RichTransformReport report;
  report.set = normalized_set(set);
  if (report.set.size() < 3) throw InputError("rich_transformations needs |A| >= 3");
  if (options.k_min < 3) throw InputError("rich_transformations needs k_min >= 3");
  report.k_min = options.k_min;
  report.list_min = std::max(options.k_min, options.list_min);
  const std::size_t n = report.set.size();

  Integer c(1);
  for (const Rational& x : report.set) c = lcm(c, denominator_of(x));
  std::vector<Integer> scaled;
  Integer bound(0);
  for (const Rational& x : report.set) {
    scaled.push_back(numerator_of(x) * (c / denominator_of(x)));
    bound = std::max(bound, Integer(abs(scaled.back())));
  }

  std::vector<ChunkResult> chunks;
  if (bound < (Integer(1) << 18)) {
    std::vector<i128> small;
    for (const Integer& v : scaled) small.push_back(static_cast<i128>(v.convert_to<long long>()));
    chunks = enumerate_all(small, options.k_min, report.list_min, options.workers);
  } else {
    chunks = enumerate_all(scaled, options.k_min, report.list_min, options.workers);
  }

  const Rational rc(c), rc2 = rc * rc;
  for (ChunkResult& chunk : chunks) {
    report.candidates += chunk.candidates;
    for (const auto& [r, count] : chunk.by_richness) report.by_richness[r] += count;
    for (const Candidate& k : chunk.kept) {
      const Rational d(k.d);
      report.transformations.push_back(
          {Mobius(Rational(-k.na) / d / rc, Rational(k.nb) / d / rc2, Rational(k.nd) / d / rc), k.richness});
    }
  }
  std::sort(report.transformations.begin(), report.transformations.end(),
            [](const RichTransform& x, const RichTransform& y) { return x.tau < y.tau; });

  for (std::size_t k = options.k_min; k <= n + 1; ++k) {
    std::size_t total = 0;
    for (auto it = report.by_richness.lower_bound(k); it != report.by_richness.end(); ++it) total += it->second;
    report.n_geq[k] = total;
  }
  if (options.include_affine) enumerate_affine(report.set, options.k_min, report.affine);
  return report;
}

namespace {

std::uint64_t pentuple_weight(std::uint64_t r) { return r * (r - 1) * (r - 2) * (r - 3) * (r - 4); }

std::uint64_t pentuples_from_histogram(const std::map<std::size_t, std::size_t>& by_richness) {
  std::uint64_t q = 0;
  for (const auto& [r, count] : by_richness)
    if (r >= 5) q += pentuple_weight(r) * count;
  return q;
}

}  // namespace

std::uint64_t count_congruent_pentuples(std::span<const Rational> set) {
  if (set.size() < 5) throw InputError("count_congruent_pentuples needs |A| >= 5");
  RichTransformOptions options;
  options.k_min = 5;
  options.list_min = set.size() + 1;
  return pentuples_from_histogram(rich_transformations(set, options).by_richness);
}

Rational cross_ratio(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational den = (a - d) * (b - c);
  if (den.is_zero()) throw InputError("cross_ratio needs distinct arguments");
  return (a - c) * (b - d) / den;
}

std::size_t distinct_cross_ratios(std::span<const Rational> set) {
  std::vector<Rational> a = normalized_set(set);
  if (a.size() < 4) throw InputError("distinct_cross_ratios needs |A| >= 4");
  // The 24 orderings of a 4-subset give the orbit of one value l under
  // l -> 1/l and l -> 1 - l.
  std::set<Rational> values;
  const Rational one(1);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          Rational x = cross_ratio(a[i], a[j], a[k], a[l]);
          values.insert(x);
          values.insert(one / x);
          values.insert(one - x);
          values.insert(one / (one - x));
          values.insert(x / (x - one));
          values.insert((x - one) / x);
        }
  return values.size();
}

RichTransformReport cross_ratio_report(std::span<const Rational> set, const RichTransformOptions& options) {
  // Q needs every transformation of richness >= 5, so enumerate from
  // min(k_min, 5) and trim afterwards.
  RichTransformOptions wide = options;
  wide.k_min = std::min<std::size_t>(options.k_min, 5);
  wide.list_min = std::max(options.k_min, options.list_min);
  RichTransformReport report = rich_transformations(set, wide);
  if (report.set.size() >= 5) report.q = pentuples_from_histogram(report.by_richness);
  if (wide.k_min != options.k_min) {
    report.k_min = options.k_min;
    report.by_richness.erase(report.by_richness.begin(), report.by_richness.lower_bound(options.k_min));
    report.n_geq.erase(report.n_geq.begin(), report.n_geq.lower_bound(options.k_min));
    std::erase_if(report.affine, [&](const RichAffine& x) { return x.richness < options.k_min; });
  }
  if (report.set.size() >= 4) report.distinct_cross_ratios = distinct_cross_ratios(report.set);
  return report;
}

std::string ngek_csv(const RichTransformReport& report) {
  std::ostringstream out;
  out << "k,N_geq_k,bound_ngek,ratio\n";
  const std::size_t n = report.set.size();
  for (std::size_t k = report.k_min; k <= n; ++k) {
    std::size_t count = report.n_geq.at(k);
    Decimal bound = eval_ngek_bound(n, k);
    out << k << ',' << count << ',' << format_decimal(bound) << ',' << format_decimal(Decimal(count) / bound)
        << '\n';
  }
  return out.str();
}

Json to_json(const RichTransformReport& report, std::size_t list_min) {
  Json j;
  j["set"] = Json::array();
  for (const Rational& a : report.set) j["set"].push_back(rational_to_json(a));
  j["k_min"] = report.k_min;
  j["N_geq"] = Json::array();
  for (const auto& [k, count] : report.n_geq) j["N_geq"].push_back({{"k", k}, {"count", count}});
  j["Q"] = report.q;
  j["distinctCrossRatios"] = report.distinct_cross_ratios;
  j["list_min"] = std::max(list_min, report.list_min);
  j["transformations"] = Json::array();
  for (const RichTransform& t : report.transformations) {
    if (t.richness < list_min) continue;
    j["transformations"].push_back({{"alpha", rational_to_json(t.tau.alpha())},
                                    {"beta", rational_to_json(t.tau.beta())},
                                    {"delta", rational_to_json(t.tau.delta())},
                                    {"richness", t.richness}});
  }
  if (!report.affine.empty()) {
    j["affine"] = Json::array();
    for (const RichAffine& t : report.affine)
      j["affine"].push_back({{"alpha", rational_to_json(t.map.alpha)},
                             {"beta", rational_to_json(t.map.beta)},
                             {"richness", t.richness}});
  }
  return j;
}

}  // namespace quadinc
