#pragma once

#include "hecke/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Assignment of rational values to parameter symbols (k1, k2, m_plus, ...).
using ParamVector = std::map<std::string, Rational, std::less<>>;

/// Affine-linear form  c + sum_s a_s * s  over named parameter symbols.
///
/// Zero coefficients are never stored, so structural equality is identity
/// of forms. The canonical text form lists symbols in sorted order followed
/// by the constant: "k1/2 - k2 + 3".
class LinForm {
 public:
  using Coeffs = std::map<std::string, Rational, std::less<>>;

  LinForm() = default;
  explicit LinForm(Rational constant) : constant_(std::move(constant)) {}

  static LinForm symbol(std::string name, const Rational& coeff = Rational(1));

  const Rational& constant() const { return constant_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Rational coeff(std::string_view symbol) const;

  bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty(); }
  std::set<std::string> symbols() const;

  /// Throws PreconditionError when a symbol of the form is not assigned.
  Rational evaluate(const ParamVector& at) const;

  /// Derivative along a direction: sum_s a_s * d_s (missing symbols count 0).
  Rational slope(const ParamVector& direction) const;

  /// The homogeneous part (constant dropped).
  LinForm linear_part() const;

  /// Scaled to coprime integer coefficients with a positive leading entry
  /// (first symbol in sorted order, else the constant). Zero stays zero.
  LinForm primitive() const;

  LinForm& operator+=(const LinForm& other);
  LinForm& operator-=(const LinForm& other);
  LinForm& operator*=(const Rational& scalar);
  LinForm& operator/=(const Rational& scalar);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Rational& s) { return a *= s; }
  friend LinForm operator*(const Rational& s, LinForm a) { return a *= s; }
  friend LinForm operator/(LinForm a, const Rational& s) { return a /= s; }
  LinForm operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
  /// Total order (coefficients, then constant); used only for canonical sorting.
  friend bool operator<(const LinForm& a, const LinForm& b);

  std::string to_string() const;
  static LinForm parse(std::string_view text);

 private:
  Rational constant_{0};
  Coeffs coeffs_;
};

/// Parses "k1=1,k2=1/2".
ParamVector parse_param_vector(std::string_view text);
std::string to_string(const ParamVector& params);

std::string to_string(const std::vector<LinForm>& forms);

}  // namespace hecke
