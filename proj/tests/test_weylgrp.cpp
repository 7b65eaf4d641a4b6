#include "hecke/weyl_group.hpp"

#include <doctest.h>

using namespace hecke;

TEST_CASE("group orders") {
  CHECK(WeylGroup(build_root_system("G2", 2)).order() == 12);
  CHECK(WeylGroup(build_root_system("F4", 4)).order() == 1152);
  CHECK(WeylGroup(build_root_system("An", 1)).order() == 2);
}

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_classes(WeylGroup(build_root_system("An", 1))).classes.size() == 2);
  CHECK(conjugacy_classes(WeylGroup(build_root_system("G2", 2))).classes.size() == 6);
  CHECK(conjugacy_classes(WeylGroup(build_root_system("F4", 4))).classes.size() == 25);
}

TEST_CASE("ellipticity") {
  WeylGroup g2(build_root_system("G2", 2));
  CHECK_FALSE(is_elliptic(IntMatrix::identity(2)));
  IntMatrix minus(2, 2);
  minus(0, 0) = minus(1, 1) = -1;
  CHECK(is_elliptic(minus));
  CHECK(det_one_minus(minus) == 4);

  WeylGroup f4(build_root_system("F4", 4));
  std::size_t cox = f4.multiply(f4.multiply(f4.generator(0), f4.generator(1)), f4.multiply(f4.generator(2), f4.generator(3)));
  CHECK(is_elliptic(f4.element(cox).matrix));
}

TEST_CASE("elliptic class counts") {
  WeylGroup g2(build_root_system("G2", 2));
  CHECK(elliptic_class_count(conjugacy_classes(g2)) == 3);
  WeylGroup f4(build_root_system("F4", 4));
  CHECK(elliptic_class_count(conjugacy_classes(f4)) == 9);

  std::size_t total = 0;
  for (const auto& sub : pseudo_levi_subsystems(build_root_system("G2", 2)))
    total += elliptic_class_count(conjugacy_classes(WeylGroup(sub->parent, sub->simple)));
  CHECK(total == 5);
}

TEST_CASE("pairings") {
  WeylGroup a1(build_root_system("An", 1));
  auto p1 = conjugacy_classes(a1);
  auto t1 = trivial_character(a1, p1);
  CHECK(elliptic_pairing(t1, t1, a1, p1) == 1);

  WeylGroup a2(build_root_system("An", 2));
  auto p2 = conjugacy_classes(a2);
  auto r2 = reflection_character(a2, p2);
  CHECK(elliptic_pairing(r2, r2, a2, p2) == 1);

  for (int n = 1; n <= 4; ++n) {
    WeylGroup c(build_root_system("Cn-datum", n));
    auto p = conjugacy_classes(c);
    auto t = trivial_character(c, p);
    CHECK(inner_product(t, t, c, p) == 1);
    auto s = sign_character(c, p);
    CHECK(inner_product(t, s, c, p) == 0);
  }
}
