#include "quadinc/linalg.hpp"

#include <utility>

namespace quadinc {

int matrix_rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

Inertia symmetric_inertia(RationalMatrix m) {
  const std::size_t n = m.size();
  Inertia result;
  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][pivot].is_zero()) ++pivot;
    if (pivot == n) {
      // All remaining diagonal entries vanish. If some off-diagonal entry
      // m[i][j] is nonzero, adding index j to index i (a congruence) makes
      // m[i][i] = 2 m[i][j] != 0.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!m[i][j].is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        result.zero += static_cast<int>(n - k);
        return result;
      }
      for (std::size_t c = 0; c < n; ++c) m[oi][c] += m[oj][c];
      for (std::size_t r = 0; r < n; ++r) m[r][oi] += m[r][oj];
      pivot = oi;
    }
    swap_index(k, pivot);
    const Rational& p = m[k][k];
    if (p.sign() > 0)
      ++result.positive;
    else
      ++result.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k].is_zero()) continue;
      Rational f = m[r][k] / p;
      // The trailing block stays symmetric: its new entries are
      // m[r][c] - m[r][k] m[k][c] / p.
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (std::size_t c = k + 1; c < n; ++c) m[k][c] = 0;
  }
  return result;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace quadinc
