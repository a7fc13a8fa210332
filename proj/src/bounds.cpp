#include "quadinc/bounds.hpp"

#include "quadinc/errors.hpp"

#include <cctype>

namespace quadinc {

namespace {

void require_positive(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw InputError("bound evaluators need m >= 1 and n >= 1");
}

Decimal log2_clamped(const Decimal& x) {
  const Decimal two(2);
  const Decimal arg = x < two ? two : x;
  return log(arg) / log(two);
}

Decimal frac(int p, int q) { return Decimal(p) / Decimal(q); }

}  // namespace

Decimal eval_bound_general(std::uint64_t m, std::uint64_t n, const Decimal& beta) {
  require_positive(m, n);
  const Decimal dm(m), dn(n);
  const Decimal first = pow(dm, frac(2, 3)) * pow(dn, frac(2, 3));
  const Decimal second =
      pow(dm, frac(6, 11)) * pow(dn, frac(9, 11)) * pow(log2_clamped(dm * dm * dm / dn), beta);
  return first + second + dm + dn;
}

Decimal eval_bound_quadric(std::uint64_t m, std::uint64_t n) { return eval_bound_general(m, n, frac(2, 11)); }

Decimal eval_bound_weak(std::uint64_t m, std::uint64_t n, const Decimal& kappa) {
  require_positive(m, n);
  if (kappa < 0) throw InputError("kappa must be nonnegative");
  const Decimal dm(m), dn(n);
  return pow(dm, frac(2, 3)) * pow(dn, frac(2, 3)) + dm + pow(dn, frac(3, 2)) * pow(log2_clamped(dn), kappa);
}

Decimal eval_bound_small_m(std::uint64_t n, std::uint64_t factor_products) {
  return Decimal(n) + Decimal(factor_products);
}

Decimal eval_ngek_bound(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 3) throw InputError("eval_ngek_bound needs n >= 1 and k >= 3");
  const Decimal dn(n), dk(k);
  const Decimal n2 = dn * dn;
  return n2 * n2 / (dk * dk * dk) + n2 * n2 * n2 / pow(dk, frac(11, 2)) * log2_clamped(dk) + n2 / dk;
}

std::string format_decimal(const Decimal& x, int digits) { return x.str(digits, std::ios_base::fmtflags(0)); }

Decimal parse_decimal(const std::string& text) {
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    bool digit = false, dot = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c)))
        digit = true;
      else if (c == '.' && !dot)
        dot = true;
      else if (!((c == '-' || c == '+') && i == 0))
        return false;
    }
    return digit;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid(text)) throw InputError("malformed decimal \"" + text + "\"");
    return Decimal(text);
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw InputError("malformed decimal \"" + text + "\"");
  Decimal d(den);
  if (d == 0) throw InputError("zero denominator in \"" + text + "\"");
  return Decimal(num) / d;
}

}  // namespace quadinc
