#include "quadinc/random.hpp"

#include "quadinc/errors.hpp"

#include <limits>

namespace quadinc {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

Rational Rng::rational(std::int64_t num_bound, std::int64_t den_bound) {
  std::int64_t num = uniform(-num_bound, num_bound);
  std::int64_t den = uniform(1, den_bound);
  return make_rational(num, den);
}

Rational Rng::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
  if (num_bound < 1) throw InputError("nonzero_rational needs num_bound >= 1");
  Rational r;
  do {
    r = rational(num_bound, den_bound);
  } while (r.is_zero());
  return r;
}

}  // namespace quadinc
