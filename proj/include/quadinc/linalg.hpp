#pragma once

#include "quadinc/rational.hpp"

#include <optional>
#include <vector>

namespace quadinc {

/// Small dense rational matrices, row-major. Exact elimination only.
using RationalMatrix = std::vector<std::vector<Rational>>;

int matrix_rank(RationalMatrix m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix, by congruence diagonalization.
Inertia symmetric_inertia(RationalMatrix m);

/// Unique solution of m x = rhs, or nullopt when m is singular.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, std::vector<Rational> rhs);

}  // namespace quadinc
