#include "hecke/root_system.hpp"

#include <doctest.h>

#include <set>

using namespace hecke;

TEST_CASE("root counts") {
  auto g2 = build_root_system("G2", 2);
  CHECK(g2->size() == 12);
  CHECK(g2->positive_count() == 6);
  auto f4 = build_root_system("F4", 4);
  CHECK(f4->size() == 48);
  CHECK(f4->positive_count() == 24);
}

TEST_CASE("Cn-datum of rank 2 has positive roots e1-e2, e1+e2, e1, e2") {
  auto c2 = build_root_system("Cn-datum", 2);
  std::set<std::vector<Rational>> pos;
  for (int i = 0; i < c2->positive_count(); ++i) pos.insert(c2->roots[i]);
  std::set<std::vector<Rational>> expected{{1, -1}, {1, 1}, {1, 0}, {0, 1}};
  CHECK(pos == expected);
}

TEST_CASE("fundamental coweights are dual to the simple roots") {
  for (auto [tag, rank] : {std::pair<const char*, int>{"G2", 2}, {"F4", 4}}) {
    auto rs = build_root_system(tag, rank);
    auto w = fundamental_coweights(*rs);
    REQUIRE(w.size() == static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) CHECK(rs->inner(rs->roots[rs->simple[j]], w[i]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("highest root of G2 on the sum of fundamental coweights is its height") {
  auto g2 = build_root_system("G2", 2);
  auto w = fundamental_coweights(*g2);
  int top = g2->positive_count() - 1;
  std::vector<Rational> rho(w[0].size());
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = w[0][k] + w[1][k];
  CHECK(g2->inner(g2->roots[top], rho) == g2->height(top));
  CHECK(g2->height(top) == 5);
}

TEST_CASE("pseudo-Levi subsystems") {
  auto g2 = build_root_system("G2", 2);
  std::multiset<std::string> tags;
  for (const auto& s : pseudo_levi_subsystems(g2)) tags.insert(s->type_tag);
  CHECK(tags == std::multiset<std::string>{"A1+A1", "A2", "G2"});

  auto f4 = build_root_system("F4", 4);
  std::set<std::string> f4tags;
  for (const auto& s : pseudo_levi_subsystems(f4)) f4tags.insert(s->type_tag);
  for (const char* t : {"F4", "B4", "C3+A1", "A2+A2", "A3+A1"}) CHECK(f4tags.count(t) == 1);
}

TEST_CASE("the A2 subsystem of G2 consists of the long roots") {
  auto g2 = build_root_system("G2", 2);
  for (const auto& s : pseudo_levi_subsystems(g2)) {
    if (s->type_tag != "A2") continue;
    CHECK(s->root_indices.size() == 6);
    for (int r : s->root_indices) CHECK(g2->length_class[r] == "long");
  }
}

TEST_CASE("unknown types and ranks are usage errors") {
  CHECK_THROWS_AS(build_root_system("nosuch", 2), UsageError);
  CHECK_THROWS_AS(build_root_system("G2", 3), UsageError);
  CHECK(canonical_type_tag("f4") == "F4");
}
