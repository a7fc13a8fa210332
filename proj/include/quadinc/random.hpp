#pragma once

#include "quadinc/rational.hpp"

#include <cstdint>
#include <random>

namespace quadinc {

/// Seeded generator with a draw procedure fixed here (not delegated to the
/// standard distributions, whose output differs between library vendors),
/// so a seed produces the same instance on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

  /// num / den with |num| <= num_bound and 1 <= den <= den_bound.
  Rational rational(std::int64_t num_bound, std::int64_t den_bound);
  /// As rational(), but never zero.
  Rational nonzero_rational(std::int64_t num_bound, std::int64_t den_bound);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quadinc
