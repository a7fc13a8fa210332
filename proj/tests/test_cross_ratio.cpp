#include "quadinc/cross_ratio.hpp"
#include "quadinc/errors.hpp"
#include "quadinc/random.hpp"
#include "quadinc/rulings.hpp"

#include <doctest.h>

#include <set>

using namespace quadinc;

namespace {

Rational R(const char* s) { return parse_rational(s); }

std::vector<Rational> S(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

std::variant<Mobius, Degenerate> fit(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2,
                                     const Rational& a3, const Rational& b3) {
  std::array<std::pair<Rational, Rational>, 3> p{{{a1, b1}, {a2, b2}, {a3, b3}}};
  return mobius_from_pairs(p);
}

// Every (sorted source triple, ordered target triple) fit, deduplicated.
std::map<Mobius, std::size_t> brute_transformations(const std::vector<Rational>& a) {
  std::map<Mobius, std::size_t> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
              if (p == q || q == r || p == r) continue;
              auto f = fit(a[i], a[p], a[j], a[q], a[l], a[r]);
              if (auto* tau = std::get_if<Mobius>(&f)) out.emplace(*tau, mobius_richness(*tau, a));
            }
  return out;
}

// Ordered pentuples of distinct sources with ordered distinct images under a
// single normal-form transformation.
std::uint64_t brute_pentuples(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  std::uint64_t total = 0;
  for (std::size_t s1 = 0; s1 < n; ++s1)
    for (std::size_t s2 = 0; s2 < n; ++s2)
      for (std::size_t s3 = 0; s3 < n; ++s3) {
        if (s1 == s2 || s2 == s3 || s1 == s3) continue;
        for (std::size_t t1 = 0; t1 < n; ++t1)
          for (std::size_t t2 = 0; t2 < n; ++t2)
            for (std::size_t t3 = 0; t3 < n; ++t3) {
              if (t1 == t2 || t2 == t3 || t1 == t3) continue;
              auto f = fit(a[s1], a[t1], a[s2], a[t2], a[s3], a[t3]);
              auto* tau = std::get_if<Mobius>(&f);
              if (!tau) continue;
              for (std::size_t s4 = 0; s4 < n; ++s4)
                for (std::size_t s5 = 0; s5 < n; ++s5) {
                  std::set<std::size_t> src{s1, s2, s3, s4, s5};
                  if (src.size() != 5) continue;
                  auto y4 = mobius_apply(*tau, a[s4]), y5 = mobius_apply(*tau, a[s5]);
                  if (!y4 || !y5) continue;
                  std::size_t hits = 0;
                  for (std::size_t t4 = 0; t4 < n; ++t4)
                    for (std::size_t t5 = 0; t5 < n; ++t5) {
                      std::set<std::size_t> dst{t1, t2, t3, t4, t5};
                      if (dst.size() == 5 && a[t4] == *y4 && a[t5] == *y5) ++hits;
                    }
                  total += hits;
                }
            }
      }
  return total;
}

std::vector<Rational> random_set(Rng& rng, std::size_t size, std::int64_t num, std::int64_t den) {
  std::set<Rational> s;
  while (s.size() < size) s.insert(rng.rational(num, den));
  return {s.begin(), s.end()};
}

std::uint64_t choose3(std::uint64_t r) { return r * (r - 1) * (r - 2) / 6; }

}  // namespace

TEST_CASE("applying a transformation") {
  Mobius tau(R("0"), R("1"), R("0"));  // 1/x
  CHECK(*mobius_apply(tau, R("2")) == R("1/2"));
  CHECK_FALSE(mobius_apply(tau, R("0")));
  Mobius sigma(R("2"), R("1"), R("1"));  // (2x + 1)/(x + 1)
  CHECK(*mobius_apply(sigma, R("1")) == R("3/2"));
  CHECK(sigma.pole() == R("-1"));
  CHECK_THROWS_AS(Mobius(R("2"), R("2"), R("1")), InputError);
}

TEST_CASE("fitting three pairs") {
  auto f = fit(R("1"), R("1"), R("2"), R("1/2"), R("1/2"), R("2"));
  REQUIRE(std::holds_alternative<Mobius>(f));
  CHECK(std::get<Mobius>(f) == Mobius(R("0"), R("1"), R("0")));
  // The identity is affine, so no normal form fits.
  auto id = fit(R("0"), R("0"), R("1"), R("1"), R("2"), R("2"));
  CHECK(std::holds_alternative<Degenerate>(id));
  auto shift = fit(R("0"), R("1"), R("1"), R("2"), R("2"), R("3"));
  CHECK(std::holds_alternative<Degenerate>(shift));
  CHECK_THROWS_AS(fit(R("0"), R("1"), R("0"), R("2"), R("2"), R("3")), InputError);
  CHECK_THROWS_AS(fit(R("0"), R("1"), R("1"), R("1"), R("2"), R("3")), InputError);

  Rng rng(8);
  for (int it = 0; it < 200; ++it) {
    Rational al = rng.rational(9, 4), be = rng.rational(9, 4), de = rng.rational(9, 4);
    if (be == al * de) continue;
    Mobius tau(al, be, de);
    std::vector<std::pair<Rational, Rational>> pairs;
    while (pairs.size() < 3) {
      Rational x = rng.rational(9, 4);
      auto y = mobius_apply(tau, x);
      bool fresh = y.has_value();
      for (const auto& [px, py] : pairs) fresh = fresh && px != x && py != *y;
      if (fresh) pairs.emplace_back(x, *y);
    }
    auto back = fit(pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second, pairs[2].first,
                    pairs[2].second);
    REQUIRE(std::holds_alternative<Mobius>(back));
    CHECK(std::get<Mobius>(back) == tau);
  }
}

TEST_CASE("planes of transformations") {
  Mobius tau(R("0"), R("1"), R("0"));
  Plane h = plane_of_mobius(tau);
  CHECK(h == Plane(R("0"), R("0"), R("1"), R("-1")));  // z = 1
  CHECK(point_on_plane({R("2"), R("1/2"), R("1")}, h));
  Mobius sigma(R("2"), R("1"), R("1"));
  CHECK(plane_of_mobius(sigma) == Plane(R("-2"), R("1"), R("1"), R("-1")));
}

TEST_CASE("small sets") {
  auto a = normalized_set(S({"2", "1", "1/2"}));
  CHECK(mobius_richness(Mobius(R("0"), R("1"), R("0")), a) == 3);
  CHECK_THROWS_AS(normalized_set(S({"1", "2/2"})), InputError);

  auto b = S({"0", "1", "2"});
  auto brute = brute_transformations(b);
  RichTransformReport rep = rich_transformations(b);
  REQUIRE(rep.transformations.size() == brute.size());
  std::size_t idx = 0;
  for (const auto& [tau, r] : brute) {
    CHECK(rep.transformations[idx].tau == tau);
    CHECK(rep.transformations[idx].richness == r);
    CHECK(r == 3);
    ++idx;
  }
  CHECK(rep.n_geq.at(3) == brute.size());
  CHECK(rep.n_geq.at(4) == 0);
  CHECK_THROWS_AS(rich_transformations(S({"0", "1"})), InputError);
  RichTransformOptions two;
  two.k_min = 2;
  CHECK_THROWS_AS(rich_transformations(b, two), InputError);
}

TEST_CASE("enumeration against brute force") {
  Rng rng(21);
  for (int it = 0; it < 12; ++it) {
    std::vector<Rational> a = it % 3 == 0 ? random_set(rng, 6, 6, 3) : random_set(rng, 5 + it % 3, 4, 2);
    auto brute = brute_transformations(a);
    RichTransformReport rep = rich_transformations(a);
    REQUIRE(rep.transformations.size() == brute.size());
    std::size_t idx = 0;
    std::uint64_t weighted = 0;
    for (const auto& [tau, r] : brute) {
      CHECK(rep.transformations[idx].tau == tau);
      CHECK(rep.transformations[idx].richness == r);
      weighted += choose3(r);
      ++idx;
    }
    CHECK(rep.candidates == weighted);
    std::size_t total = 0;
    for (auto [r, count] : rep.by_richness) total += count;
    CHECK(total == brute.size());
    for (auto [k, count] : rep.n_geq) {
      std::size_t expect = 0;
      for (const auto& [tau, r] : brute) expect += r >= k;
      CHECK(count == expect);
    }
  }
}

TEST_CASE("congruent pentuples") {
  CHECK(count_congruent_pentuples(S({"1", "2", "1/2", "3", "1/3"})) == 120);
  CHECK_THROWS_AS(count_congruent_pentuples(S({"1", "2", "3", "4"})), InputError);
  Rng rng(33);
  for (int it = 0; it < 6; ++it) {
    std::vector<Rational> a = it < 2 ? S({"0", "1", "2", "3", "4", "5"}) : random_set(rng, 5 + it % 2, 3, 2);
    if (it == 1) a = S({"1", "2", "1/2", "3", "1/3", "-1"});
    CHECK(count_congruent_pentuples(a) == brute_pentuples(a));
  }
}

TEST_CASE("distinct cross-ratios") {
  CHECK(distinct_cross_ratios(S({"0", "1", "2", "3"})) == 6);
  CHECK(cross_ratio(R("0"), R("1"), R("2"), R("3")) == R("4/3"));
  CHECK_THROWS_AS(distinct_cross_ratios(S({"0", "1", "2"})), InputError);
  Rng rng(12);
  for (int it = 0; it < 20; ++it) {
    auto a = random_set(rng, 4 + it % 5, 20, 5);
    Rational al = rng.rational(5, 3), be = rng.rational(5, 3), de = rng.rational(5, 3);
    if (be == al * de) continue;
    Mobius tau(al, be, de);
    std::vector<Rational> image;
    for (const auto& x : a) {
      auto y = mobius_apply(tau, x);
      if (!y) break;
      image.push_back(*y);
    }
    if (image.size() != a.size()) continue;
    CHECK(distinct_cross_ratios(a) == distinct_cross_ratios(image));
  }
}

TEST_CASE("transformation planes carry no lines and match grid incidences") {
  auto a = S({"1", "2", "1/2", "3", "1/3", "-1", "0"});
  RichTransformReport rep = rich_transformations(a);
  REQUIRE(!rep.transformations.empty());
  for (const auto& t : rep.transformations) {
    CHECK(lines_in_plane_section(plane_of_mobius(t.tau), Quadric::hyperbolic_paraboloid()).line_count == 0);
    CHECK(grid_incidence_crosscheck(a, t.tau));
  }
  // Pole inside the set.
  CHECK(grid_incidence_crosscheck(S({"1", "2", "3", "4"}), Mobius(R("0"), R("1"), R("-1"))));
}

TEST_CASE("big entries agree with small ones") {
  auto base = S({"0", "1", "2", "3", "5", "8", "-4"});
  RichTransformReport small = rich_transformations(base);
  for (const char* scale : {"100000000000000000000", "1/100000000000000000000"}) {
    std::vector<Rational> scaled;
    for (const auto& x : base) scaled.push_back(x * R(scale));
    RichTransformReport big = rich_transformations(scaled);
    CHECK(big.by_richness == small.by_richness);
    CHECK(big.candidates == small.candidates);
    CHECK(count_congruent_pentuples(scaled) == count_congruent_pentuples(base));
  }
}

TEST_CASE("worker count does not change the result") {
  Rng rng(2);
  auto a = random_set(rng, 12, 10, 4);
  RichTransformOptions one, four;
  four.workers = 4;
  RichTransformReport x = rich_transformations(a, one), y = rich_transformations(a, four);
  CHECK(dump(to_json(x, 3)) == dump(to_json(y, 3)));
  CHECK(x.candidates == y.candidates);
}

TEST_CASE("list_min keeps the histogram") {
  auto a = S({"1", "2", "1/2", "3", "1/3", "4", "1/4", "-1"});
  RichTransformOptions all, trimmed;
  trimmed.list_min = 6;
  RichTransformReport x = rich_transformations(a, all), y = rich_transformations(a, trimmed);
  CHECK(x.by_richness == y.by_richness);
  CHECK(x.n_geq == y.n_geq);
  for (const auto& t : y.transformations) CHECK(t.richness >= 6);
  std::uint64_t weighted = 0;
  for (auto [r, count] : x.by_richness) weighted += choose3(r) * count;
  CHECK(weighted == x.candidates);
}

TEST_CASE("affine maps") {
  RichTransformOptions o;
  o.include_affine = true;
  RichTransformReport rep = rich_transformations(S({"0", "1", "2", "3"}), o);
  auto has = [&](const char* al, const char* be, std::size_t r) {
    for (const auto& m : rep.affine)
      if (m.map == AffineMap{R(al), R(be)}) return m.richness == r;
    return false;
  };
  CHECK(has("1", "0", 4));
  CHECK(has("-1", "3", 4));
  CHECK(has("1", "1", 3));
  for (const auto& m : rep.affine) CHECK(m.richness >= 3);
  CHECK(rich_transformations(S({"0", "1", "2", "3"})).affine.empty());
}

TEST_CASE("report outputs") {
  RichTransformReport rep = cross_ratio_report(S({"1", "2", "1/2", "3", "1/3"}));
  CHECK(rep.q == 120);
  CHECK(rep.distinct_cross_ratios > 0);
  std::string csv = ngek_csv(rep);
  CHECK(csv.rfind("k,N_geq_k,bound_ngek,ratio\n3,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  Json j = to_json(rep, 5);
  CHECK(j.at("Q") == 120);
  CHECK(j.at("set").size() == 5);
  for (const auto& t : j.at("transformations")) CHECK(t.at("richness").get<int>() >= 5);
  RichTransformOptions high;
  high.k_min = 4;
  RichTransformReport r4 = cross_ratio_report(S({"1", "2", "1/2", "3", "1/3"}), high);
  CHECK(r4.q == 120);
  CHECK(r4.n_geq.begin()->first == 4);
}
