#include "hecke/numeric.hpp"

#include "hecke/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cstdlib>
#include <sstream>

namespace hecke {

unsigned precision_digits() {
  static const unsigned digits = [] {
    const char* env = std::getenv("HECKE_PRECISION_DIGITS");
    if (!env || !*env) return 50u;
    char* end = nullptr;
    long d = std::strtol(env, &end, 10);
    if (*end != '\0' || d < 40 || d > 2000)
      throw UsageError("HECKE_PRECISION_DIGITS must be an integer in [40, 2000]");
    return static_cast<unsigned>(d);
  }();
  return digits;
}

void ensure_precision() {
  if (Real::default_precision() != precision_digits()) Real::default_precision(precision_digits());
}

Real to_real(const Rational& q) {
  ensure_precision();
  return Real(numerator(q).str()) / Real(denominator(q).str());
}

Real pi() {
  ensure_precision();
  return boost::math::constants::pi<Real>();
}

Real relative_tolerance() {
  ensure_precision();
  return Real("1e-30");
}

Complex Complex::root_of_unity(const Rational& turns) {
  Rational t = frac(turns);
  if (t == 0) return {Real(1), Real(0)};
  if (t == Rational(1, 2)) return {Real(-1), Real(0)};
  Real angle = 2 * pi() * to_real(t);
  return {cos(angle), sin(angle)};
}

Real Complex::abs() const { return sqrt(re * re + im * im); }

Real power(const Real& v, const Rational& e) {
  if (e == 0) return Real(1);
  if (is_integer(e) && abs_of(e) < 64) {
    long n = numerator(e).convert_to<long>();
    Real r = 1;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) r *= v;
    return n < 0 ? Real(1) / r : r;
  }
  return exp(to_real(e) * log(v));
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace hecke
