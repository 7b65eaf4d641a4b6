#pragma once

#include "hecke/cyclotomic.hpp"
#include "hecke/linform.hpp"
#include "hecke/numeric.hpp"
#include "hecke/residual.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// unit * v^expo - 1 with unit = exp(2 pi i * turns), turns in [0, 1).
struct MassFactor {
  Rational turns;
  LinForm expo;
  bool numerator = true;

  bool unit_is_one() const { return turns == 0; }
  bool vanishes_at(const ParamVector& at) const { return unit_is_one() && expo.evaluate(at) == 0; }
};

struct MassFunction {
  std::vector<MassFactor> factors;
  LinForm prefactor;  // exponent of v multiplying the product
  Rational scalar = 1;
  std::vector<LinForm> source_coords;
  std::string source_subsystem;

  std::vector<std::string> symbols() const;
  std::size_t count(bool numerator) const;
};

/// Factors over every root alpha of the parent with alpha(r) = alpha(s) v^alpha(xi):
/// numerator alpha(r)^-1 - 1, denominator v^-k(alpha) alpha(r)^-1 - 1,
/// identically zero factors dropped.
MassFunction mass_function(const GenericResidualPoint& p);

struct RegularizedValue {
  Real value;
  int vanishing_order = 0;
  int vanishing_numerator = 0;
  int vanishing_denominator = 0;
  ParamVector direction_used;

  int sign() const { return value > 0 ? 1 : (value < 0 ? -1 : 0); }
};

/// Integer directions d with <form, d> != 0 for every given form, in a fixed
/// deterministic order, pairwise non-proportional. At most `count` are returned.
std::vector<ParamVector> admissible_directions(const std::vector<LinForm>& forms,
                                               const std::vector<std::string>& symbols, std::size_t count);

/// Vanishing factors are replaced by slope(expo, direction) * ln v. The
/// direction is chosen automatically when omitted.
RegularizedValue evaluate_regularized(const MassFunction& m, const ParamVector& at, const Rational& v,
                                      std::optional<ParamVector> direction = {});

/// Evaluates along two independent admissible directions and requires agreement
/// in sign and to 1e-30 relative; returns the first evaluation.
RegularizedValue evaluate_checked(const MassFunction& m, const ParamVector& at, const Rational& v);

/// Factor of the graded expression: form (numerator) or form (denominator).
struct GradedFactor {
  LinForm form;
  bool numerator = true;
};

/// prod' alpha(c) / prod' (alpha(c) - k_s(alpha)) over the roots of the subsystem.
class GradedSign {
 public:
  explicit GradedSign(const GenericResidualPoint& p);
  GradedSign(std::vector<GradedFactor> factors);

  const std::vector<GradedFactor>& factors() const { return factors_; }

  struct Result {
    int sign = 0;
    int vanishing_order = 0;
    int vanishing_numerator = 0;
    int vanishing_denominator = 0;
    ParamVector direction_used;
  };

  /// Regularized sign; consistency across two admissible directions is required.
  Result evaluate(const ParamVector& at) const;
  Result evaluate(const ParamVector& at, const ParamVector& direction) const;

  /// Number of negative factors without regularization; nullopt when a factor vanishes.
  std::optional<int> negative_factor_count(const ParamVector& at) const;

 private:
  std::vector<GradedFactor> factors_;
  std::vector<std::string> symbols_;
};

int sign_graded(const GenericResidualPoint& p, const ParamVector& at);

/// Primitive integer forms whose zero set carries positive net multiplicity.
std::vector<LinForm> singular_locus(const MassFunction& m);

/// Equal-parameter formal degree function in t = q^(1/root_denominator).
struct ReederFunction {
  int root_denominator = 1;
  int cyclotomic_order = 1;
  Rational scalar = 1;
  int t_shift = 0;
  std::map<int, int> exponents;  // Phi_n(t)^e
  bool complete = false;
  Poly numerator;    // residual numerator in t after cancellation
  Poly denominator;  // residual denominator in t after cancellation
  std::size_t root_count = 0;

  /// R(0) for R = m / t^shift.
  Rational r_at_zero() const;
  /// Exact value when q^(1/root_denominator) is rational.
  std::optional<Rational> exact_value(const Rational& q) const;
  Real value(const Rational& q) const;
  std::string to_string() const;
};

/// m(tau) = q^(|R|/2) prod' (alpha(tau) - 1) / prod' (q alpha(tau) - 1) with
/// alpha(tau) = alpha(s) q^alpha(xi) at all parameters equal to 1.
ReederFunction reeder_m(const GenericResidualPoint& p);

/// Direct numeric evaluation of the defining product, for cross-checks.
Real reeder_direct(const GenericResidualPoint& p, const Rational& q);

}  // namespace hecke
