#pragma once

#include "hecke/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns the quotient and stores the remainder.
  Poly divide(const Poly& d, Poly& remainder) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Phi_n, cached.
const Poly& cyclotomic_polynomial(int n);

/// scalar * x^shift * prod Phi_n^e_n * remainder, with remainder monic or 1.
struct CyclotomicFactorization {
  Rational scalar = 1;
  int shift = 0;
  std::map<int, int> exponents;
  Poly remainder = Poly::constant(1);

  bool complete() const { return remainder.degree() == 0; }
  std::string to_string(const std::string& var = "q") const;
};

/// Trial division by Phi_1 .. Phi_max_n after extracting the power of x.
CyclotomicFactorization factor_cyclotomic(const Poly& p, int max_n = 60);

/// Elements of Q(zeta_N) as polynomials in zeta reduced modulo Phi_N.
class CyclotomicField {
 public:
  explicit CyclotomicField(int order);
  int order() const { return n_; }
  Poly reduce(const Poly& p) const;
  /// zeta^j
  Poly power(int j) const;
  Poly multiply(const Poly& a, const Poly& b) const { return reduce(a * b); }
  bool is_rational(const Poly& a) const { return reduce(a).degree() <= 0; }

 private:
  int n_;
};

}  // namespace hecke
