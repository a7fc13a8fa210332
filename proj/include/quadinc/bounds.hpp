#pragma once

// Closed-form evaluators for the incidence bounds, with their implicit
// constants set to 1. Logarithms are base 2 and their arguments are clamped
// below at 2, so every evaluator is total and positive on its domain.
//
// Arithmetic is 50-digit decimal floating point with round-to-nearest;
// results are reliable to at least 30 significant digits.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <string>

namespace quadinc {

using Decimal = boost::multiprecision::cpp_dec_float_50;

/// m^{2/3} n^{2/3} + m^{6/11} n^{9/11} log^{beta}(m^3/n) + m + n.
Decimal eval_bound_general(std::uint64_t m, std::uint64_t n, const Decimal& beta);

/// eval_bound_general with beta = 2/11, the quadric case.
Decimal eval_bound_quadric(std::uint64_t m, std::uint64_t n);

/// m^{2/3} n^{2/3} + m + n^{3/2} log^{kappa} n.
Decimal eval_bound_weak(std::uint64_t m, std::uint64_t n, const Decimal& kappa);

/// n + sum_l |P_l| |H_l|, the total-incidence bound when m is small.
Decimal eval_bound_small_m(std::uint64_t n, std::uint64_t factor_products);

/// n^4 / k^3 + n^6 / k^{11/2} log k + n^2 / k, for k >= 3.
Decimal eval_ngek_bound(std::uint64_t n, std::uint64_t k);

/// General-format decimal with `digits` significant digits.
std::string format_decimal(const Decimal& x, int digits = 30);

/// Parses a decimal ("0.25") or a fraction ("2/11"). Throws InputError.
Decimal parse_decimal(const std::string& text);

}  // namespace quadinc
