#include "quadinc/rational.hpp"

#include "quadinc/errors.hpp"

#include <cctype>

namespace quadinc {

namespace mp = boost::multiprecision;

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rational(num, den);
}

Rational make_rational(long long num, long long den) {
  return make_rational(Integer(num), Integer(den));
}

Integer numerator_of(const Rational& r) { return Integer(mp::numerator(r)); }
Integer denominator_of(const Rational& r) { return Integer(mp::denominator(r)); }

int sign(const Rational& r) { return r.sign(); }
bool is_zero(const Rational& r) { return r.is_zero(); }
bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

std::string to_string(const Rational& r) {
  Integer den = denominator_of(r);
  std::string out = numerator_of(r).str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("malformed rational: \"" + std::string(whole) + "\"");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw InputError("malformed rational: \"" + std::string(whole) + "\"");
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
  return make_rational(num, den);
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  Integer num = numerator_of(r);
  Integer den = denominator_of(r);
  Integer sn = mp::sqrt(num);
  Integer sd = mp::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = Rational(sn, sd);
  return true;
}

Integer gcd(const Integer& a, const Integer& b) { return Integer(mp::gcd(a, b)); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return Integer(mp::abs(a / gcd(a, b) * b));
}

}  // namespace quadinc
