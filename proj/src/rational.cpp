#include "hecke/rational.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hecke {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw UsageError("not an integer: '" + std::string(s) + "'");
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw UsageError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    return Rational(num) / Rational(den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view fraction = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (!fraction.empty() && !all_digits(fraction)) throw UsageError("bad decimal '" + std::string(text) + "'");
    if (!whole.empty() && !all_digits(whole)) throw UsageError("bad decimal '" + std::string(text) + "'");
    if (whole.empty() && fraction.empty()) throw UsageError("bad decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < fraction.size(); ++i) scale *= 10;
    std::string text10 = std::string(whole) + std::string(fraction);
    text10.erase(0, std::min(text10.find_first_not_of('0'), text10.size()));
    Integer digits(text10.empty() ? "0" : text10);
    Rational value = Rational(digits) / Rational(scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text));
}

Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer quotient = n / d;
  if (n % d != 0 && n < 0) quotient -= 1;
  return quotient;
}

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

int sign_of(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = boost::multiprecision::gcd(a, b);
  Integer l = a / g * b;
  return l < 0 ? Integer(-l) : l;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm_of(l, denominator(v));
  return l;
}

}  // namespace hecke
