#include "hecke/mass_function.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hecke {

namespace {

std::vector<std::string> symbols_of(const std::vector<LinForm>& forms) {
  std::set<std::string> s;
  for (const auto& f : forms)
    for (const auto& [name, _] : f.coeffs()) s.insert(name);
  return {s.begin(), s.end()};
}

bool positively_proportional(const std::vector<int>& a, const std::vector<int>& b) {
  // a = c b with c > 0; both primitive, so a == b
  return a == b;
}

int gcd_all(const std::vector<int>& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

std::vector<std::string> MassFunction::symbols() const {
  std::vector<LinForm> forms;
  for (const auto& f : factors) forms.push_back(f.expo);
  forms.push_back(prefactor);
  return symbols_of(forms);
}

std::size_t MassFunction::count(bool numerator) const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [&](const MassFactor& f) { return f.numerator == numerator; }));
}

MassFunction mass_function(const GenericResidualPoint& p) {
  const RootSystem& rs = p.parent();
  MassFunction m;
  m.source_coords = p.coords;
  m.source_subsystem = p.subsystem->type_tag;
  for (int r = 0; r < rs.size(); ++r) {
    Rational turns = frac(-rs.value(r, p.subsystem->kac_point));
    LinForm value = p.value(r);
    MassFactor num{turns, -value, true};
    if (!(turns == 0 && num.expo.is_zero())) m.factors.push_back(num);
    MassFactor den{turns, -rs.k(r) - value, false};
    if (!(turns == 0 && den.expo.is_zero())) m.factors.push_back(den);
  }
  return m;
}

std::vector<ParamVector> admissible_directions(const std::vector<LinForm>& forms,
                                               const std::vector<std::string>& symbols, std::size_t count) {
  std::vector<ParamVector> out;
  const int n = static_cast<int>(symbols.size());
  if (n == 0 || count == 0) return out;
  std::vector<std::vector<int>> chosen;
  for (int bound = 1; bound <= 6 && out.size() < count; ++bound) {
    std::vector<std::vector<int>> candidates;
    std::vector<int> d(n, -bound);
    while (true) {
      int maxabs = 0;
      for (int x : d) maxabs = std::max(maxabs, x < 0 ? -x : x);
      if (maxabs == bound && gcd_all(d) == 1) candidates.push_back(d);
      int i = n - 1;
      while (i >= 0 && d[i] == bound) d[i--] = -bound;
      if (i < 0) break;
      ++d[i];
    }
    std::sort(candidates.begin(), candidates.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      int sa = 0, sb = 0;
      for (int x : a) sa += x < 0 ? -x : x;
      for (int x : b) sb += x < 0 ? -x : x;
      if (sa != sb) return sa < sb;
      return a > b;
    });
    for (const auto& cand : candidates) {
      if (out.size() >= count) break;
      ParamVector dir;
      for (int i = 0; i < n; ++i) dir[symbols[i]] = Rational(cand[i]);
      bool ok = std::all_of(forms.begin(), forms.end(), [&](const LinForm& f) { return f.slope(dir) != 0; });
      if (!ok) continue;
      bool fresh = std::none_of(chosen.begin(), chosen.end(),
                                [&](const std::vector<int>& c) { return positively_proportional(c, cand); });
      if (!fresh) continue;
      chosen.push_back(cand);
      out.push_back(dir);
    }
  }
  return out;
}

RegularizedValue evaluate_regularized(const MassFunction& m, const ParamVector& at, const Rational& v,
                                      std::optional<ParamVector> direction) {
  if (v <= 1) throw PreconditionError("v must exceed 1");
  ensure_precision();
  std::vector<LinForm> vanishing;
  for (const auto& f : m.factors)
    if (f.vanishes_at(at)) vanishing.push_back(f.expo);
  if (!direction) {
    if (vanishing.empty()) {
      direction = ParamVector{};
    } else {
      auto dirs = admissible_directions(vanishing, m.symbols(), 1);
      if (dirs.empty()) throw PreconditionError("no admissible regularization direction at " + to_string(at));
      direction = dirs.front();
    }
  }

  RegularizedValue out;
  out.direction_used = *direction;
  const Real V = to_real(v);
  const Real lnv = log(V);
  Complex num(Real(1)), den(Real(1));
  for (const auto& f : m.factors) {
    Complex val;
    if (f.vanishes_at(at)) {
      Rational s = f.expo.slope(*direction);
      if (s == 0) throw PreconditionError("regularization direction is not generic for this point");
      val = Complex(to_real(s) * lnv);
      (f.numerator ? out.vanishing_numerator : out.vanishing_denominator)++;
    } else {
      val = Complex::root_of_unity(f.turns) * Complex(power(V, f.expo.evaluate(at))) - Complex(Real(1));
    }
    if (f.numerator)
      num = num * val;
    else
      den = den * val;
  }
  out.vanishing_order = out.vanishing_numerator - out.vanishing_denominator;
  if (out.vanishing_order < 0)
    throw PreconditionError("mass function has a pole at " + to_string(at) + " (order " +
                            std::to_string(out.vanishing_order) + ")");
  if (out.vanishing_order > 0) {
    out.value = Real(0);
    return out;
  }
  Complex q = num / den;
  if (abs(q.im) > relative_tolerance() * q.abs()) throw InternalError("mass function value is not real");
  out.value = to_real(m.scalar) * q.re * power(V, m.prefactor.evaluate(at));
  return out;
}

RegularizedValue evaluate_checked(const MassFunction& m, const ParamVector& at, const Rational& v) {
  std::vector<LinForm> vanishing;
  for (const auto& f : m.factors)
    if (f.vanishes_at(at)) vanishing.push_back(f.expo);
  if (vanishing.empty()) return evaluate_regularized(m, at, v, ParamVector{});
  auto dirs = admissible_directions(vanishing, m.symbols(), 2);
  if (dirs.size() < 2) throw PreconditionError("fewer than two admissible directions at " + to_string(at));
  RegularizedValue a = evaluate_regularized(m, at, v, dirs[0]);
  RegularizedValue b = evaluate_regularized(m, at, v, dirs[1]);
  if (a.sign() != b.sign()) throw PreconditionError("regularized value depends on the direction at " + to_string(at));
  if (a.value != 0) {
    Real rel = abs(a.value - b.value) / abs(a.value);
    if (rel > relative_tolerance())
      throw PreconditionError("regularized value depends on the direction at " + to_string(at));
  }
  return a;
}

GradedSign::GradedSign(const GenericResidualPoint& p) {
  for (int r : p.subsystem->root_indices) {
    LinForm value = p.value(r);
    if (!value.is_zero()) factors_.push_back({value, true});
    LinForm shifted = value - p.subsystem->k(r);
    if (!shifted.is_zero()) factors_.push_back({shifted, false});
  }
  std::vector<LinForm> forms;
  for (const auto& f : factors_) forms.push_back(f.form);
  symbols_ = symbols_of(forms);
}

GradedSign::GradedSign(std::vector<GradedFactor> factors) : factors_(std::move(factors)) {
  std::vector<LinForm> forms;
  for (const auto& f : factors_) forms.push_back(f.form);
  symbols_ = symbols_of(forms);
}

GradedSign::Result GradedSign::evaluate(const ParamVector& at, const ParamVector& direction) const {
  Result r;
  r.direction_used = direction;
  int sign = 1;
  for (const auto& f : factors_) {
    Rational x = f.form.evaluate(at);
    if (x == 0) {
      x = f.form.slope(direction);
      if (x == 0) throw PreconditionError("regularization direction is not generic for this point");
      (f.numerator ? r.vanishing_numerator : r.vanishing_denominator)++;
    }
    if (x < 0) sign = -sign;
  }
  r.vanishing_order = r.vanishing_numerator - r.vanishing_denominator;
  if (r.vanishing_order < 0) throw PreconditionError("graded expression has a pole at " + to_string(at));
  r.sign = r.vanishing_order > 0 ? 0 : sign;
  return r;
}

GradedSign::Result GradedSign::evaluate(const ParamVector& at) const {
  std::vector<LinForm> vanishing;
  for (const auto& f : factors_)
    if (f.form.evaluate(at) == 0) vanishing.push_back(f.form);
  if (vanishing.empty()) return evaluate(at, ParamVector{});
  auto dirs = admissible_directions(vanishing, symbols_, 2);
  if (dirs.size() < 2) throw PreconditionError("fewer than two admissible directions at " + to_string(at));
  Result a = evaluate(at, dirs[0]);
  Result b = evaluate(at, dirs[1]);
  if (a.sign != b.sign) throw PreconditionError("graded sign depends on the direction at " + to_string(at));
  return a;
}

std::optional<int> GradedSign::negative_factor_count(const ParamVector& at) const {
  int negatives = 0;
  for (const auto& f : factors_) {
    Rational x = f.form.evaluate(at);
    if (x == 0) return std::nullopt;
    if (x < 0) ++negatives;
  }
  return negatives;
}

int sign_graded(const GenericResidualPoint& p, const ParamVector& at) { return GradedSign(p).evaluate(at).sign; }

std::vector<LinForm> singular_locus(const MassFunction& m) {
  std::map<LinForm, int> net;
  for (const auto& f : m.factors) {
    if (!f.unit_is_one() || f.expo.is_constant()) continue;
    net[f.expo.primitive()] += f.numerator ? 1 : -1;
  }
  std::vector<LinForm> out;
  for (const auto& [form, mult] : net)
    if (mult > 0) out.push_back(form);
  return out;
}

namespace {

/// Laurent polynomial in t with coefficients in Q(zeta_N).
struct Laurent {
  int low = 0;
  std::vector<Poly> coeffs;  // coeffs[i] multiplies t^(low + i)

  static Laurent one() { return {0, {Poly::constant(1)}}; }

  /// (zeta^j t^a - 1) * this
  Laurent times_factor(const CyclotomicField& field, int j, int a) const {
    int new_low = std::min(low, low + a);
    int new_high = std::max(low + static_cast<int>(coeffs.size()) - 1, low + a + static_cast<int>(coeffs.size()) - 1);
    Laurent out{new_low, std::vector<Poly>(new_high - new_low + 1)};
    Poly z = field.power(j);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      int e = low + static_cast<int>(i);
      out.coeffs[e - new_low] = out.coeffs[e - new_low] - coeffs[i];
      out.coeffs[e + a - new_low] = out.coeffs[e + a - new_low] + field.multiply(z, coeffs[i]);
    }
    return out;
  }

  /// Rational coefficients as a polynomial times t^low; throws when irrational.
  Poly to_rational(const CyclotomicField& field, int& shift) const {
    std::vector<Rational> c;
    for (const auto& x : coeffs) {
      Poly r = field.reduce(x);
      if (r.degree() > 0) throw InternalError("formal degree product has irrational coefficients");
      c.push_back(r.coeff(0));
    }
    shift = low;
    return Poly(std::move(c));
  }
};

struct ReederData {
  int D = 1;
  int N = 1;
  std::vector<std::pair<Rational, Rational>> root_data;  // (turns, exponent in q)
};

ReederData reeder_data(const GenericResidualPoint& p) {
  const RootSystem& rs = p.parent();
  ParamVector at;
  for (const auto& s : rs.parameter_symbols()) at[s] = 1;
  if (!is_residual_at(p, at)) throw PreconditionError("point is not residual at equal parameters");
  ReederData d;
  Integer D = 1, N = 1;
  for (int r = 0; r < rs.size(); ++r) {
    Rational turns = frac(rs.value(r, p.subsystem->kac_point));
    Rational e = p.value(r).evaluate(at);
    D = lcm_of(D, denominator(e));
    N = lcm_of(N, denominator(turns));
    d.root_data.emplace_back(turns, e);
  }
  d.D = static_cast<int>(D.convert_to<long>());
  d.N = static_cast<int>(N.convert_to<long>());
  return d;
}

}  // namespace

Rational ReederFunction::r_at_zero() const {
  // Phi_1(0) = -1 and Phi_n(0) = 1 for n > 1
  auto it = exponents.find(1);
  int e1 = it == exponents.end() ? 0 : it->second;
  return (e1 % 2 == 0) ? scalar : Rational(-scalar);
}

std::optional<Rational> ReederFunction::exact_value(const Rational& q) const {
  if (!complete || root_denominator != 1) return std::nullopt;
  Rational v = scalar;
  for (int i = 0; i < (t_shift < 0 ? -t_shift : t_shift); ++i) v = t_shift < 0 ? v / q : v * q;
  for (const auto& [n, e] : exponents) {
    Rational phi = cyclotomic_polynomial(n).evaluate(q);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) v = e < 0 ? v / phi : v * phi;
  }
  return v;
}

Real ReederFunction::value(const Rational& q) const {
  ensure_precision();
  Real t = power(to_real(q), Rational(1, root_denominator));
  Real v = to_real(scalar) * pow(t, t_shift);
  for (const auto& [n, e] : exponents) {
    Real phi = 0;
    const auto& c = cyclotomic_polynomial(n).coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) phi = phi * t + to_real(*it);
    v *= pow(phi, e);
  }
  Real num = 0, den = 0;
  for (auto it = numerator.coeffs().rbegin(); it != numerator.coeffs().rend(); ++it) num = num * t + to_real(*it);
  for (auto it = denominator.coeffs().rbegin(); it != denominator.coeffs().rend(); ++it)
    den = den * t + to_real(*it);
  return v * num / den;
}

std::string ReederFunction::to_string() const {
  const std::string var = root_denominator == 1 ? "q" : "q^(1/" + std::to_string(root_denominator) + ")";
  std::string out = hecke::to_string(scalar);
  if (t_shift != 0) out += " * " + var + "^" + std::to_string(t_shift);
  for (const auto& [n, e] : exponents)
    if (e != 0) out += " * Phi" + std::to_string(n) + "^" + std::to_string(e);
  if (!complete) out += " * (" + numerator.to_string(var) + ") / (" + denominator.to_string(var) + ")";
  return out;
}

ReederFunction reeder_m(const GenericResidualPoint& p) {
  ReederData d = reeder_data(p);
  CyclotomicField field(d.N);
  Laurent num = Laurent::one(), den = Laurent::one();
  for (const auto& [turns, e] : d.root_data) {
    int j = static_cast<int>(numerator(turns * d.N).convert_to<long>());
    if (!(turns == 0 && e == 0)) num = num.times_factor(field, j, static_cast<int>(numerator(e * d.D).convert_to<long>()));
    if (!(turns == 0 && e == -1))
      den = den.times_factor(field, j, static_cast<int>(numerator((e + 1) * d.D).convert_to<long>()));
  }
  int num_low = 0, den_low = 0;
  Poly pn = num.to_rational(field, num_low);
  Poly pd = den.to_rational(field, den_low);
  auto fn = factor_cyclotomic(pn);
  auto fd = factor_cyclotomic(pd);

  ReederFunction out;
  out.root_denominator = d.D;
  out.cyclotomic_order = d.N;
  out.root_count = d.root_data.size();
  out.scalar = fn.scalar / fd.scalar;
  out.t_shift = num_low + fn.shift - den_low - fd.shift + d.D * static_cast<int>(d.root_data.size()) / 2;
  for (const auto& [n, e] : fn.exponents) out.exponents[n] += e;
  for (const auto& [n, e] : fd.exponents) out.exponents[n] -= e;
  for (auto it = out.exponents.begin(); it != out.exponents.end();)
    it = it->second == 0 ? out.exponents.erase(it) : std::next(it);
  out.numerator = fn.remainder;
  out.denominator = fd.remainder;
  out.complete = fn.complete() && fd.complete();
  return out;
}

Real reeder_direct(const GenericResidualPoint& p, const Rational& q) {
  ReederData d = reeder_data(p);
  ensure_precision();
  const Real Q = to_real(q);
  Complex num(Real(1)), den(Real(1));
  for (const auto& [turns, e] : d.root_data) {
    Complex a = Complex::root_of_unity(turns) * Complex(power(Q, e));
    if (!(turns == 0 && e == 0)) num = num * (a - Complex(Real(1)));
    if (!(turns == 0 && e == -1)) den = den * (Complex(Q) * a - Complex(Real(1)));
  }
  Complex r = num / den;
  if (abs(r.im) > relative_tolerance() * r.abs()) throw InternalError("formal degree value is not real");
  return r.re * power(Q, Rational(static_cast<long>(d.root_data.size()), 2));
}

}  // namespace hecke
