#include "hecke/mass_function.hpp"
#include "hecke/tables.hpp"

#include <doctest.h>

#include <set>

using namespace hecke;

namespace {

const ParamVector kOnes{{"k1", Rational(1)}, {"k2", Rational(1)}};

std::multiset<std::string> exponents(const MassFunction& m, bool numerator) {
  std::multiset<std::string> out;
  for (const auto& f : m.factors)
    if (f.numerator == numerator) out.insert(f.expo.to_string());
  return out;
}

}  // namespace

TEST_CASE("A1 mass function") {
  auto a1 = build_root_system("An", 1);
  auto p = enumerate_generic_residual_points(full_subsystem(a1)).at(0);
  auto m = mass_function(p);
  CHECK(exponents(m, true) == std::multiset<std::string>{"-k", "k"});
  CHECK(exponents(m, false) == std::multiset<std::string>{"-2k"});
  CHECK(m.prefactor.is_zero());
  auto sing = singular_locus(m);
  REQUIRE(sing.size() == 1);
  CHECK(sing[0].to_string() == "k");
}

TEST_CASE("G2 b1 has twelve numerator factors, none dropped") {
  auto m = mass_function(point_for_row("g2", "b1"));
  CHECK(m.count(true) == 12);
}

TEST_CASE("G2 b5 carries cube roots of unity on the short roots") {
  const auto& p = point_for_row("g2", "b5");
  auto m = mass_function(p);
  int nontrivial = 0;
  for (const auto& f : m.factors)
    if (f.numerator && !f.unit_is_one()) {
      ++nontrivial;
      CHECK((f.turns == Rational(1) / 3 || f.turns == Rational(2) / 3));
    }
  CHECK(nontrivial == 6);
}

TEST_CASE("regularization at G2 b2, k1 = k2 = 1") {
  auto m = mass_function(point_for_row("g2", "b2"));
  auto r = evaluate_checked(m, kOnes, Rational(2));
  CHECK(r.vanishing_order == 0);
  CHECK(r.sign() != 0);
  std::set<LinForm> num, den;
  for (const auto& f : m.factors)
    if (f.vanishes_at(kOnes)) (f.numerator ? num : den).insert(f.expo.primitive());
  CHECK(num.size() == 1);
  CHECK(num == den);
}

TEST_CASE("F4 b11 vanishes at k1 = k2 = 1") {
  auto m = mass_function(point_for_row("f4", "b11"));
  auto r = evaluate_checked(m, kOnes, Rational(2));
  CHECK(r.value == 0);
  CHECK(r.vanishing_order > 0);
  auto sing = singular_locus(m);
  CHECK(std::find(sing.begin(), sing.end(), LinForm::parse("k1 - k2")) != sing.end());
}

TEST_CASE("directions agree at a generic point") {
  auto m = mass_function(point_for_row("f4", "b6"));
  ParamVector at = parse_param_vector("k1=5/7,k2=13/11");
  auto dirs = admissible_directions({LinForm::parse("k1"), LinForm::parse("k2")}, m.symbols(), 2);
  REQUIRE(dirs.size() == 2);
  auto a = evaluate_regularized(m, at, Rational(2), dirs[0]);
  auto b = evaluate_regularized(m, at, Rational(2), dirs[1]);
  CHECK(a.vanishing_numerator == 0);
  CHECK(a.value == b.value);
}

TEST_CASE("graded signs") {
  CHECK(sign_graded(point_for_row("g2", "b2"), kOnes) == -1);
  CHECK(sign_graded(point_for_row("f4", "b2"), kOnes) == -1);
  CHECK(sign_graded(point_for_row("g2", "b1"), parse_param_vector("k1=1/3,k2=1/5")) == 1);
  CHECK(evaluate_checked(mass_function(point_for_row("g2", "b1")), kOnes, Rational(2)).sign() == 1);
}

TEST_CASE("A1 equal-parameter function") {
  auto a1 = build_root_system("An", 1);
  auto p = enumerate_generic_residual_points(full_subsystem(a1)).at(0);
  auto r = reeder_m(p);
  CHECK(r.complete);
  for (int q : {2, 3, 5}) {
    auto v = r.exact_value(Rational(q));
    REQUIRE(v);
    CHECK(abs_of(*v) == Rational(q - 1) / Rational(q + 1));
  }
}

TEST_CASE("equal-parameter functions of G2 and F4") {
  for (const char* t : {"g2", "f4"})
    for (const auto& p : all_generic_residual_points(t)) {
      if (!is_residual_at(p, kOnes)) continue;
      auto r = reeder_m(p);
      CHECK(r.complete);
      CHECK(r.r_at_zero() == 1);
      CHECK(r.root_denominator == 1);
      for (const auto& [n, e] : r.exponents)
        if (n == 1) CHECK(e == p.parent().rank);
      for (int q : {2, 3, 5}) CHECK(r.value(Rational(q)) > 0);
    }
}
