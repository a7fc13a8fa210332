#pragma once

// Möbius transformations y = (alpha x + beta) / (x + delta), their encoding as
// planes z - alpha x + delta y - beta = 0 against the grid {(a, b, ab)} on
// z = xy, k-rich transformation counts, congruent pentuples and distinct
// cross-ratios.

#include "quadinc/bounds.hpp"
#include "quadinc/geometry.hpp"
#include "quadinc/serialize.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace quadinc {

class Mobius {
 public:
  /// Throws InputError when beta == alpha * delta (a constant map).
  Mobius(Rational alpha, Rational beta, Rational delta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& delta() const { return delta_; }
  Rational pole() const { return -delta_; }

  friend bool operator==(const Mobius&, const Mobius&) = default;
  friend std::strong_ordering operator<=>(const Mobius& a, const Mobius& b);

 private:
  Rational alpha_, beta_, delta_;
};

/// y = alpha x + beta with alpha != 0; the maps the normal form above omits.
struct AffineMap {
  Rational alpha, beta;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// tau(x), or nullopt at the pole x = -delta.
std::optional<Rational> mobius_apply(const Mobius& tau, const Rational& x);

/// No normal-form transformation fits: the linear system is singular or
/// inconsistent, or its solution is a constant map.
struct Degenerate {
  enum class Reason { Inconsistent, ConstantMap } reason;
};

/// Solves a_i b_i - alpha a_i + delta b_i - beta = 0 for the three pairs.
/// Throws InputError unless the a_i are distinct and the b_i are distinct.
std::variant<Mobius, Degenerate> mobius_from_pairs(std::span<const std::pair<Rational, Rational>, 3> pairs);

/// z - alpha x + delta y - beta = 0.
Plane plane_of_mobius(const Mobius& tau);

/// |{a in A : a != pole, tau(a) in A}|. A must be sorted ascending.
std::size_t mobius_richness(const Mobius& tau, std::span<const Rational> sorted_set);

struct GridInstance {
  std::vector<Rational> set;   // sorted, distinct
  std::vector<Point3> points;  // (a, b, ab) for a, b in set, row-major
};

/// Throws InputError on duplicates.
GridInstance grid_instance(std::span<const Rational> set);

/// Sorted copy; throws InputError on duplicates.
std::vector<Rational> normalized_set(std::span<const Rational> set);

struct RichTransform {
  Mobius tau;
  std::size_t richness;
};

struct RichAffine {
  AffineMap map;
  std::size_t richness;
};

struct RichTransformOptions {
  std::size_t k_min = 3;
  /// Only transformations with richness >= max(k_min, list_min) are kept in
  /// the list; the histogram always covers every k >= k_min. Counts at
  /// k = 3 grow like |A|^6, so large sets want list_min > 3.
  std::size_t list_min = 0;
  bool include_affine = false;
  unsigned workers = 1;
};

struct RichTransformReport {
  std::vector<Rational> set;
  std::size_t k_min = 3;
  std::size_t list_min = 3;
  /// Transformations with richness >= list_min, sorted by (alpha, beta, delta).
  std::vector<RichTransform> transformations;
  /// r -> number of transformations with richness exactly r, for r >= k_min.
  std::map<std::size_t, std::size_t> by_richness;
  /// Non-degenerate (sorted source triple, target triple) candidates. Each
  /// transformation of richness r is hit C(r, 3) times.
  std::uint64_t candidates = 0;
  /// Filled only with include_affine, sorted by (alpha, beta).
  std::vector<RichAffine> affine;
  /// k -> N_{>=k} for k_min <= k <= |A| + 1.
  std::map<std::size_t, std::size_t> n_geq;
  std::uint64_t q = 0;
  std::size_t distinct_cross_ratios = 0;
};

/// Every transformation with richness >= 3 is fixed by three of its pairs, so
/// enumerating source triples against ordered target triples is complete.
/// Each transformation is reported once, from the triple of its three
/// smallest rich sources. Requires |A| >= 3, k_min >= 3.
RichTransformReport rich_transformations(std::span<const Rational> set, const RichTransformOptions& options = {});

/// Sum over transformations of richness r >= 5 of r (r-1) (r-2) (r-3) (r-4):
/// ordered distinct-source pentuples paired with their images. |A| >= 5.
std::uint64_t count_congruent_pentuples(std::span<const Rational> set);

/// (a - c)(b - d) / ((a - d)(b - c)).
Rational cross_ratio(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// Distinct cross-ratios over ordered 4-tuples of distinct elements. |A| >= 4.
std::size_t distinct_cross_ratios(std::span<const Rational> set);

/// Richness of tau on A equals the number of grid points of A x A on the
/// plane of tau (pole column excluded), computed via the incidence sweep.
bool grid_incidence_crosscheck(std::span<const Rational> set, const Mobius& tau);
/// The same for many distinct transformations, with one sweep over the grid.
std::vector<bool> grid_incidence_crosscheck(std::span<const Rational> set, std::span<const Mobius> taus);

/// Full report: enumeration, Q (when |A| >= 5) and distinct cross-ratios
/// (when |A| >= 4).
RichTransformReport cross_ratio_report(std::span<const Rational> set, const RichTransformOptions& options = {});

/// "k,N_geq_k,bound_ngek,ratio" rows for k_min <= k <= |A|.
std::string ngek_csv(const RichTransformReport& report);
/// Summary JSON; transformations with richness >= list_min are listed.
Json to_json(const RichTransformReport& report, std::size_t list_min);

}  // namespace quadinc
