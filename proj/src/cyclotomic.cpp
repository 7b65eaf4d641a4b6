#include "hecke/cyclotomic.hpp"

#include "hecke/errors.hpp"

#include <mutex>

namespace hecke {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

Poly Poly::divide(const Poly& d, Poly& remainder) const {
  if (d.is_zero()) throw InternalError("polynomial division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  if (degree() < dd) {
    remainder = *this;
    return {};
  }
  std::vector<Rational> q(degree() - dd + 1, Rational(0));
  for (int i = degree(); i >= dd; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / d.leading();
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
  }
  remainder = Poly(std::move(r));
  return Poly(std::move(q));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    Rational mag = abs_of(a);
    if (out.empty())
      out += a < 0 ? "-" : "";
    else
      out += a < 0 ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += hecke::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

const Poly& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (n < 1) throw InternalError("cyclotomic index must be positive");
  for (int m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    Poly p = Poly::monomial(1, m) - Poly::constant(1);
    for (int d = 1; d < m; ++d) {
      if (m % d) continue;
      Poly rem;
      p = p.divide(cache.at(d), rem);
      if (!rem.is_zero()) throw InternalError("cyclotomic recursion failed");
    }
    cache.emplace(m, p);
  }
  return cache.at(n);
}

std::string CyclotomicFactorization::to_string(const std::string& var) const {
  std::string out = hecke::to_string(scalar);
  if (shift != 0) out += " * " + var + "^" + std::to_string(shift);
  for (const auto& [n, e] : exponents)
    if (e != 0) out += " * Phi" + std::to_string(n) + "(" + var + ")^" + std::to_string(e);
  if (!complete()) out += " * (" + remainder.to_string(var) + ")";
  return out;
}

CyclotomicFactorization factor_cyclotomic(const Poly& p, int max_n) {
  if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  CyclotomicFactorization f;
  std::vector<Rational> c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  f.shift = static_cast<int>(low);
  Poly rest(std::vector<Rational>(c.begin() + low, c.end()));
  f.scalar = rest.leading();
  rest = (Rational(1) / f.scalar) * rest;
  for (int n = 1; n <= max_n && rest.degree() > 0; ++n) {
    const Poly& phi = cyclotomic_polynomial(n);
    while (rest.degree() >= phi.degree()) {
      Poly rem;
      Poly q = rest.divide(phi, rem);
      if (!rem.is_zero()) break;
      rest = q;
      ++f.exponents[n];
    }
  }
  f.remainder = rest;
  return f;
}

CyclotomicField::CyclotomicField(int order) : n_(order) {
  if (order < 1) throw InternalError("cyclotomic field order must be positive");
}

Poly CyclotomicField::reduce(const Poly& p) const {
  Poly rem;
  p.divide(cyclotomic_polynomial(n_), rem);
  return rem;
}

Poly CyclotomicField::power(int j) const {
  j %= n_;
  if (j < 0) j += n_;
  return reduce(Poly::monomial(1, j));
}

}  // namespace hecke
