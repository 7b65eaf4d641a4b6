#include "hecke/cn_family.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace hecke {

namespace {

Rational ipow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= x;
  return e < 0 ? Rational(1 / out) : out;
}

void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_of(n, n, cur, out);
  return out;
}

std::string join(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "-" || text == "0") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("invalid partition part '" + item + "'");
    }
  }
  if (!std::is_sorted(out.rbegin(), out.rend())) throw UsageError("partition parts must be non-increasing: " + text);
  return out;
}

std::size_t find_tableau(const std::vector<Bitableau>& basis, const Bitableau& t) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].position == t.position) return i;
  return basis.size();
}

bool is_standard(const Bitableau& t) {
  std::map<std::tuple<int, int, int>, int> at;
  for (int k = 1; k <= t.size(); ++k) {
    const Box& b = t.box(k);
    at[{b.component, b.row, b.col}] = k;
  }
  for (const auto& [key, k] : at) {
    auto [c, x, y] = key;
    if (y > 1) {
      auto it = at.find({c, x, y - 1});
      if (it == at.end() || it->second > k) return false;
    }
    if (x > 1) {
      auto it = at.find({c, x - 1, y});
      if (it == at.end() || it->second > k) return false;
    }
  }
  return true;
}

Bitableau swapped(const Bitableau& t, int k) {
  Bitableau s = t;
  std::swap(s.position[k - 1], s.position[k - 2]);
  return s;
}

std::string gen_name(int i) { return "N_" + std::to_string(i); }

}  // namespace

int Bipartition::size() const {
  int s = 0;
  for (int p : lambda) s += p;
  for (int p : mu) s += p;
  return s;
}

int Bipartition::lambda_size() const {
  int s = 0;
  for (int p : lambda) s += p;
  return s;
}

std::string Bipartition::to_string() const {
  return (lambda.empty() ? std::string("-") : join(lambda)) + "|" + (mu.empty() ? std::string("-") : join(mu));
}

Bipartition Bipartition::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw UsageError("bipartition must look like '2,1|1' (use '-' for an empty side): " + text);
  Bipartition bp{parse_parts(text.substr(0, bar)), parse_parts(text.substr(bar + 1))};
  return bp;
}

std::vector<Bipartition> bipartitions(int n) {
  if (n < 0) throw UsageError("n must be non-negative");
  std::vector<Bipartition> out;
  for (int l = n; l >= 0; --l)
    for (const auto& lam : partitions(l))
      for (const auto& mu : partitions(n - l)) out.push_back({lam, mu});
  return out;
}

const Box& Bitableau::box(int k) const {
  if (k < 1 || k > size()) throw InternalError("tableau entry out of range");
  return position[k - 1];
}

std::string Bitableau::to_string() const {
  std::string out;
  for (int c = 0; c < 2; ++c) {
    std::map<int, std::map<int, int>> rows;
    for (int k = 1; k <= size(); ++k)
      if (box(k).component == c) rows[box(k).row][box(k).col] = k;
    std::string side;
    for (const auto& [x, cols] : rows) {
      if (!side.empty()) side += "/";
      std::vector<int> r;
      for (const auto& [y, k] : cols) r.push_back(k);
      side += join(r);
    }
    out += (c ? "|" : "") + (side.empty() ? std::string("-") : side);
  }
  return out;
}

std::vector<Bitableau> standard_bitableaux(const Bipartition& bp) {
  const int n = bp.size();
  std::vector<std::vector<int>> shape = {bp.lambda, bp.mu};
  std::vector<std::vector<int>> filled = {std::vector<int>(bp.lambda.size(), 0), std::vector<int>(bp.mu.size(), 0)};
  std::vector<Bitableau> out;
  Bitableau cur;
  std::function<void()> place = [&]() {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < 2; ++c)
      for (std::size_t x = 0; x < shape[c].size(); ++x) {
        if (filled[c][x] >= shape[c][x]) continue;
        if (x > 0 && filled[c][x - 1] <= filled[c][x]) continue;
        ++filled[c][x];
        cur.position.push_back({c, static_cast<int>(x) + 1, filled[c][x]});
        place();
        cur.position.pop_back();
        --filled[c][x];
      }
  };
  place();
  return out;
}

CnParams CnParams::parse(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 3) throw UsageError("parameters must be 'v0,v1,v2'");
  for (const auto& x : v)
    if (x <= 0) throw UsageError("parameters must be positive");
  return {v[0], v[1], v[2]};
}

std::string CnParams::to_string() const {
  return hecke::to_string(v0) + "," + hecke::to_string(v1) + "," + hecke::to_string(v2);
}

Rational content_value(const Bitableau& t, int k, const CnParams& p) {
  const Box& b = t.box(k);
  Rational c = ipow(p.v1, 2 * b.content());
  return b.component == 0 ? Rational(c * p.v2) : Rational(-c / p.v2);
}

CnModule build_module(const Bipartition& bp, const CnParams& params) {
  if (params.v0 <= 0 || params.v1 <= 0 || params.v2 <= 0) throw PreconditionError("parameters must be positive");
  if (bp.size() == 0) throw PreconditionError("module needs n >= 1");
  CnModule m;
  m.bp = bp;
  m.params = params;
  m.basis = standard_bitableaux(bp);
  const int n = bp.size();
  const std::size_t d = m.basis.size();

  for (int j = 1; j <= n; ++j) {
    RatMatrix th(d, d);
    for (std::size_t t = 0; t < d; ++t) th(t, t) = -content_value(m.basis[t], n - j + 1, params) / params.v0;
    m.theta.push_back(th);
  }
  std::map<std::vector<Rational>, std::size_t> weights;
  for (std::size_t t = 0; t < d; ++t) {
    std::vector<Rational> w;
    for (const auto& th : m.theta) w.push_back(th(t, t));
    if (!weights.emplace(w, t).second)
      throw PreconditionError("parameters are not generic for " + bp.to_string() + ": repeated weight");
  }

  const Rational& v1 = params.v1;
  for (int i = 1; i < n; ++i) {
    RatMatrix g(d, d);
    const int k = n - i + 1;
    for (std::size_t t = 0; t < d; ++t) {
      Rational a = m.theta[i - 1](t, t), b = m.theta[i](t, t);
      Rational c = (v1 - 1 / v1) / (1 - b / a);
      g(t, t) = c;
      Bitableau s = swapped(m.basis[t], k);
      if (is_standard(s)) g(find_tableau(m.basis, s), t) = 1 / v1 + c;
    }
    m.gens.push_back(g);
  }
  {
    RatMatrix g(d, d);
    for (std::size_t t = 0; t < d; ++t) {
      Rational a = m.theta[n - 1](t, t);
      if (a * a == 1) throw PreconditionError("parameters are not generic for " + bp.to_string() + ": theta_n = +-1");
      g(t, t) = ((params.v2 - 1 / params.v2) * a + (params.v0 - 1 / params.v0)) / (a - 1 / a);
    }
    m.gens.push_back(g);
  }

  auto failures = relation_failures(m);
  if (!failures.empty()) throw InternalError("module relations fail for " + bp.to_string() + ": " + failures.front());
  return m;
}

std::vector<std::string> relation_failures(const CnModule& m) {
  std::vector<std::string> out;
  const int n = m.bp.size();
  const std::size_t d = m.dimension();
  const RatMatrix one = RatMatrix::identity(d);
  const CnParams& p = m.params;
  const auto& N = m.gens;
  const auto& th = m.theta;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };

  for (int i = 0; i < n; ++i) {
    const Rational q = i + 1 < n ? p.v1 : p.v2;
    check((N[i] - q * one) * (N[i] + Rational(1 / q) * one) == RatMatrix(d, d), "quadratic " + gen_name(i + 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string what = "braid " + gen_name(i + 1) + " " + gen_name(j + 1);
      if (j == i + 1 && j + 1 < n)
        check(N[i] * N[j] * N[i] == N[j] * N[i] * N[j], what);
      else if (j == i + 1)
        check(N[i] * N[j] * N[i] * N[j] == N[j] * N[i] * N[j] * N[i], what);
      else
        check(N[i] * N[j] == N[j] * N[i], what);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) check(th[i] * th[j] == th[j] * th[i], "theta commute");

  for (int i = 1; i < n; ++i) {
    check(th[i - 1] * N[i - 1] - N[i - 1] * th[i] == (p.v1 - 1 / p.v1) * th[i - 1],
          "cross relation " + gen_name(i));
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1)
        check(th[j - 1] * N[i - 1] == N[i - 1] * th[j - 1],
              "theta_" + std::to_string(j) + " commutes with " + gen_name(i));
  }
  {
    RatMatrix inv(d, d);
    for (std::size_t t = 0; t < d; ++t) inv(t, t) = 1 / th[n - 1](t, t);
    check(th[n - 1] * N[n - 1] - N[n - 1] * inv ==
              (p.v2 - 1 / p.v2) * th[n - 1] + (p.v0 - 1 / p.v0) * one,
          "cross relation " + gen_name(n));
    for (int j = 1; j < n; ++j)
      check(th[j - 1] * N[n - 1] == N[n - 1] * th[j - 1],
            "theta_" + std::to_string(j) + " commutes with " + gen_name(n));
  }
  return out;
}

bool is_discrete_series(const CnModule& m) {
  for (std::size_t t = 0; t < m.dimension(); ++t) {
    Rational prod = 1;
    for (const auto& th : m.theta) {
      prod *= th(t, t);
      if (abs_of(prod) >= 1) return false;
    }
  }
  return true;
}

std::vector<CentralCharacterEntry> central_character_string(const Bipartition& bp) {
  std::vector<CentralCharacterEntry> out;
  const LinForm mm = LinForm::symbol("m_minus"), mp = LinForm::symbol("m_plus");
  for (std::size_t x = 0; x < bp.lambda.size(); ++x)
    for (int y = 1; y <= bp.lambda[x]; ++y) {
      LinForm c = LinForm(Rational(y - static_cast<int>(x) - 1)) + mm;
      out.push_back({-1, c * Rational(2), c});
    }
  for (std::size_t x = 0; x < bp.mu.size(); ++x)
    for (int y = 1; y <= bp.mu[x]; ++y) {
      LinForm c = LinForm(Rational(y - static_cast<int>(x) - 1)) - mp;
      out.push_back({1, c * Rational(2), c});
    }
  return out;
}

GradedSign epsilon_expression(const std::vector<LinForm>& cbar, const LinForm& m) {
  std::vector<GradedFactor> f;
  auto add = [&](const LinForm& form, bool numerator) {
    if (!form.is_zero()) f.push_back({form, numerator});
  };
  const LinForm one(Rational(1));
  for (std::size_t i = 0; i < cbar.size(); ++i) {
    for (int s : {1, -1}) {
      LinForm a = cbar[i] * Rational(s);
      add(a, true);
      add(a - m, false);
    }
    for (std::size_t j = i + 1; j < cbar.size(); ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          LinForm a = cbar[i] * Rational(s) + cbar[j] * Rational(t);
          add(a, true);
          add(a - one, false);
        }
  }
  return GradedSign(std::move(f));
}

int epsilon_displayed_C(const Bipartition& bp, const Rational& m_plus, const Rational& m_minus) {
  std::vector<LinForm> lam, mu;
  for (const auto& e : central_character_string(bp)) (e.sign < 0 ? lam : mu).push_back(e.graded);
  ParamVector at{{"m_plus", m_plus}, {"m_minus", m_minus}};
  int s = 1;
  if (!lam.empty()) s *= epsilon_expression(lam, LinForm::symbol("m_minus")).evaluate(at).sign;
  if (!mu.empty()) s *= epsilon_expression(mu, -LinForm::symbol("m_plus")).evaluate(at).sign;
  return s;
}

GradedSign graded_limit(const MassFunction& m) {
  std::vector<GradedFactor> f;
  for (const auto& x : m.factors) f.push_back({x.unit_is_one() ? x.expo : LinForm(Rational(-1)), x.numerator});
  if (m.scalar < 0) f.push_back({LinForm(Rational(-1)), true});
  return GradedSign(std::move(f));
}

int epsilon_sign_C(const Bipartition& bp, const Rational& m_plus, const Rational& m_minus) {
  if (bp.size() == 0) return 1;
  MassFunction m = fdeg_function(central_character_string(bp));
  return graded_limit(m).evaluate({{"m_plus", m_plus}, {"m_minus", m_minus}}).sign;
}

int diagonal_length(const std::vector<int>& parts) {
  int d = 0;
  for (std::size_t x = 0; x < parts.size(); ++x)
    if (parts[x] > static_cast<int>(x)) ++d;
  return d;
}

MassFunction fdeg_function(const std::vector<CentralCharacterEntry>& string) {
  MassFunction m;
  const LinForm mp = LinForm::symbol("m_plus"), mm = LinForm::symbol("m_minus");
  auto add = [&](Rational turns, LinForm expo, bool numerator, bool plus_one) {
    if (plus_one) {
      turns = frac(turns + Rational(1, 2));
      if (turns == 0 && expo.is_zero()) return;
      m.scalar = -m.scalar;
    } else if (turns == 0 && expo.is_zero()) {
      return;
    }
    m.factors.push_back({turns, std::move(expo), numerator});
  };
  for (const auto& e : string) m.source_coords.push_back(e.graded);
  m.source_subsystem = "Cn";

  const std::size_t n = string.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      Rational turns = string[i].sign < 0 ? Rational(1, 2) : Rational(0);
      LinForm ae = string[i].exponent * Rational(s);
      add(turns, -ae, true, false);
      add(turns, -mp * Rational(2) - ae, false, false);
      add(turns, -mm * Rational(2) - ae, false, true);
    }
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          Rational turns = string[i].sign * string[j].sign < 0 ? Rational(1, 2) : Rational(0);
          LinForm ae = string[i].exponent * Rational(s) + string[j].exponent * Rational(t);
          add(turns, -ae, true, false);
          add(turns, LinForm(Rational(-2)) - ae, false, false);
        }
  }
  return m;
}

RegularizedValue fdeg_C(const Bipartition& bp, const Rational& m_plus, const Rational& m_minus, const Rational& v) {
  MassFunction m = fdeg_function(central_character_string(bp));
  RegularizedValue r = evaluate_checked(m, {{"m_plus", m_plus}, {"m_minus", m_minus}}, v);
  r.value *= epsilon_sign_C(bp, m_plus, m_minus);
  return r;
}

WeylRestriction restrict_to_weyl(const Bipartition& bp, const WeylGroup& group, const ClassPartition& classes) {
  const int n = bp.size();
  const RootSystem& rs = group.root_system();
  if (rs.type_tag != "Cn-datum" || rs.rank != n) throw PreconditionError("group must be W0 of the Cn-datum of rank n");
  if (classes.group_id != group.id()) throw PreconditionError("class partition belongs to another group");
  auto basis = standard_bitableaux(bp);
  const std::size_t d = basis.size();

  WeylRestriction out;
  out.dimension = d;
  for (int i = 1; i < n; ++i) {
    RatMatrix g(d, d);
    const int k = n - i + 1;
    for (std::size_t t = 0; t < d; ++t) {
      const Box& a = basis[t].box(k);
      const Box& b = basis[t].box(k - 1);
      Rational c = a.component == b.component ? Rational(1) / Rational(a.content() - b.content()) : Rational(0);
      g(t, t) = c;
      Bitableau s = swapped(basis[t], k);
      if (is_standard(s)) g(find_tableau(basis, s), t) = 1 + c;
    }
    out.generators.push_back(g);
  }
  {
    RatMatrix g(d, d);
    for (std::size_t t = 0; t < d; ++t) g(t, t) = basis[t].box(1).component == 0 ? 1 : -1;
    out.generators.push_back(g);
  }

  const RatMatrix one = RatMatrix::identity(d);
  const auto& s = out.generators;
  for (int i = 0; i < n; ++i) {
    if (s[i] * s[i] != one) throw InternalError("classical limit: s_" + std::to_string(i + 1) + " is not an involution");
    for (int j = i + 1; j < n; ++j) {
      RatMatrix p = s[i] * s[j];
      RatMatrix q = p;
      int order = j == i + 1 ? (j + 1 < n ? 3 : 4) : 2;
      for (int r = 1; r < order; ++r) q = q * p;
      if (q != one) throw InternalError("classical limit: Coxeter relation fails");
    }
  }

  out.character.group_id = group.id();
  for (const auto& cls : classes.classes) {
    RatMatrix w = one;
    for (int g : group.element(cls.representative).word) w = w * s[g];
    Rational tr = w.trace();
    if (!is_integer(tr)) throw InternalError("character value is not an integer");
    out.character.values.push_back(numerator(tr));
  }
  for (int i = 0; i < bp.lambda_size(); ++i) out.compact_part.push_back(-1);
  for (int i = bp.lambda_size(); i < n; ++i) out.compact_part.push_back(1);
  return out;
}

}  // namespace hecke
