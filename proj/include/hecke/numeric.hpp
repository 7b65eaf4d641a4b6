#pragma once

#include "hecke/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace hecke {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Working precision in decimal digits: HECKE_PRECISION_DIGITS or 50.
unsigned precision_digits();

/// Applies precision_digits() as the default precision of new Reals.
void ensure_precision();

Real to_real(const Rational& q);
Real pi();
Real relative_tolerance();  // 1e-30

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  /// exp(2 pi i * turns)
  static Complex root_of_unity(const Rational& turns);

  Real abs() const;
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

/// v^e for rational e and real v > 0.
Real power(const Real& v, const Rational& e);

/// Shortest round-trip decimal rendering with the given significant digits.
std::string to_string(const Real& x, int digits = 25);

}  // namespace hecke
