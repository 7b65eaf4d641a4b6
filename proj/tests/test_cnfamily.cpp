#include "hecke/cn_family.hpp"

#include <doctest.h>

using namespace hecke;

namespace {

Bipartition bp(const char* s) { return Bipartition::parse(s); }

}  // namespace

TEST_CASE("bipartitions") {
  auto one = bipartitions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == bp("1|"));
  CHECK(one[1] == bp("|1"));
  CHECK(bipartitions(2).size() == 5);
  CHECK(bipartitions(3).size() == 10);
  CHECK(bipartitions(4).size() == 20);
  CHECK(bp("2,1|").to_string() == "2,1|-");
  CHECK(bp("-|1,1") == bp("|1,1"));
  CHECK_THROWS(Bipartition::parse("1,2|"));
}

TEST_CASE("box contents") {
  CnParams p{3, 2, 5};
  auto t = standard_bitableaux(bp("1|"))[0];
  CHECK(content_value(t, 1, p) == 5);

  auto mu = standard_bitableaux(bp("|2"))[0];
  CHECK(content_value(mu, 2, p) == Rational(-4) / 5);

  auto col = standard_bitableaux(bp("1,1|"))[0];
  CHECK(content_value(col, 2, p) == Rational(5) / 4);
}

TEST_CASE("rank one module") {
  CnParams p{3, 2, 5};
  auto m = build_module(bp("1|"), p);
  CHECK(m.dimension() == 1);
  CHECK(m.theta[0](0, 0) == Rational(-5) / 3);
}

TEST_CASE("relations hold for every bipartition of n <= 4") {
  for (const auto& p : {CnParams{3, 2, 5}, CnParams{7, 3, 2}, CnParams{1000, 2, 2}})
    for (int n = 1; n <= 4; ++n)
      for (const auto& b : bipartitions(n)) CHECK(relation_failures(build_module(b, p)).empty());
  CHECK(build_module(bp("1|1"), {3, 2, 5}).dimension() == 2);
}

TEST_CASE("dimension counts standard bitableaux") {
  CHECK(build_module(bp("2,1|1"), {3, 2, 5}).dimension() == 8);
  CHECK(standard_bitableaux(bp("2|1,1")).size() == 6);
}

TEST_CASE("discrete series") {
  CHECK(is_discrete_series(build_module(bp("1|"), {4, 2, 2})));
  CHECK_FALSE(is_discrete_series(build_module(bp("1|"), {Rational(1) / 4, 2, 2})));
  for (int n = 1; n <= 3; ++n)
    for (const auto& b : bipartitions(n)) CHECK(is_discrete_series(build_module(b, {1000, 2, 2})));
}

TEST_CASE("central characters") {
  auto one = central_character_string(bp("1|"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].sign == -1);
  CHECK(one[0].exponent.to_string() == "2m_minus");
  auto two = central_character_string(bp("2|"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].graded.to_string() == "m_minus");
  CHECK(two[1].graded.to_string() == "m_minus + 1");
  CHECK(central_character_string(bp("|")).empty());
}

TEST_CASE("epsilon") {
  CHECK(epsilon_displayed_C(bp("|"), 10, 10) == 1);
  CHECK(epsilon_displayed_C(bp("1|"), 10, 10) == 1);
  CHECK(epsilon_displayed_C(bp("2|"), 10, 10) == 1);
  CHECK(epsilon_displayed_C(bp("3|"), 10, 10) == 1);
  for (int n = 1; n <= 3; ++n)
    for (const auto& b : bipartitions(n)) {
      int s = epsilon_sign_C(b, 10, 10);
      CHECK(s == epsilon_sign_C(b, 100, 100));
      CHECK(s == epsilon_sign_C(b, 1000, 1000));
      int parity = b.lambda_size() + diagonal_length(b.lambda) + diagonal_length(b.mu);
      CHECK(s == epsilon_displayed_C(b, 10, 10) * (parity % 2 ? -1 : 1));
    }
}

TEST_CASE("formal degrees are positive") {
  const Rational v = Rational(3) / 2;
  for (int n = 1; n <= 3; ++n)
    for (const auto& b : bipartitions(n))
      for (const auto& [mp, mm] : {std::pair<Rational, Rational>{Rational(3) / 7, Rational(1) / 3}, {10, Rational(11) / 4},
                                   {Rational(-2) / 3, Rational(-7) / 5}})
        CHECK(fdeg_C(b, mp, mm, v).value > 0);
}

TEST_CASE("rank one formal degree") {
  ensure_precision();
  Rational mp = Rational(3) / 7, mm = Rational(1) / 3, v = 2;
  Real a = power(Real(2), -2 * mp), b = power(Real(2), -2 * mm);
  Real x = power(Real(2), 2 * mm);
  Real num = (-1 / x - 1) * (-x - 1);
  Real den = (-a / x - 1) * (-a * x - 1) * (-b / x + 1);
  Real expected = abs(num / den);
  Real got = fdeg_C(bp("1|"), mp, mm, v).value;
  CHECK(abs(got - expected) <= relative_tolerance() * expected);
}

TEST_CASE("restriction to the Weyl group") {
  for (int n = 1; n <= 3; ++n) {
    WeylGroup w(build_root_system("Cn-datum", n));
    auto classes = conjugacy_classes(w);
    std::vector<ClassFunction> seen;
    for (const auto& b : bipartitions(n)) {
      auto r = restrict_to_weyl(b, w, classes);
      CHECK(inner_product(r.character, r.character, w, classes) == 1);
      for (const auto& c : seen) CHECK(inner_product(c, r.character, w, classes) == 0);
      seen.push_back(r.character);
    }
  }
  WeylGroup w1(build_root_system("Cn-datum", 1));
  auto r = restrict_to_weyl(bp("1|"), w1, conjugacy_classes(w1));
  CHECK(r.compact_part == std::vector<int>{-1});
}
