#include "hecke/residual.hpp"
#include "hecke/tables.hpp"

#include <doctest.h>

#include <set>

using namespace hecke;

namespace {

std::vector<std::string> coords_for(const std::string& type, const std::string& tag) {
  std::vector<std::string> out;
  for (const auto& p : all_generic_residual_points(type))
    if (p.subsystem->type_tag == tag) out.push_back(p.coords_string());
  return out;
}

}  // namespace

TEST_CASE("G2 points for the full subsystem") {
  auto pts = coords_for("g2", "G2");
  CHECK(std::set<std::string>(pts.begin(), pts.end()) ==
        std::set<std::string>{"[k1, k2]", "[k1, -k1 + k2]", "[k1, -k1/2 + k2/2]"});
}

TEST_CASE("F4 has eight points for the full subsystem, one of them in the orbit of [0, k1, 0, k2 - k1]") {
  CHECK(coords_for("f4", "F4").size() == 8);
  auto f4 = build_root_system("F4", 4);
  WeylGroup w(f4);
  std::vector<LinForm> target{LinForm(0), LinForm::parse("k1"), LinForm(0), LinForm::parse("k2 - k1")};
  int hits = 0;
  for (const auto& p : all_generic_residual_points("f4"))
    if (p.subsystem->type_tag == "F4" && conjugating_element(w, p.coords, target)) ++hits;
  CHECK(hits == 1);
}

TEST_CASE("A1 has the single point alpha(xi) = k") {
  auto a1 = build_root_system("An", 1);
  auto pts = enumerate_generic_residual_points(full_subsystem(a1));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords.size() == 1);
  CHECK(pts[0].coords[0] == a1->k(0));
  CHECK(residual_index(pts[0]).matches == 1);
  CHECK(residual_index(pts[0]).zeros == 0);
}

TEST_CASE("residual index of the subregular G2 point") {
  const auto& p = point_for_row("g2", "b2");
  CHECK(residual_index(p).excess() == 2);
  auto at = residual_index(p, parse_param_vector("k1=1,k2=1"));
  CHECK(at.matches == 4);
  CHECK(at.zeros == 2);
  CHECK(at.excess() == 2);
}

TEST_CASE("coweight coordinates") {
  CHECK(to_string(coweight_coordinates(point_for_row("g2", "b1"))) == "[k1, k2]");
  CHECK(to_string(coweight_coordinates(point_for_row("f4", "b1"))) == "[k1, k1, k2, k2]");
  auto g2 = build_root_system("G2", 2);
  auto zero = ambient_from_coords(*g2, {LinForm(0), LinForm(0)});
  for (const auto& x : zero) CHECK(x.is_zero());
}

TEST_CASE("enumeration does not depend on the subset order") {
  for (const auto& sub : pseudo_levi_subsystems(build_root_system("G2", 2))) {
    auto a = enumerate_generic_residual_points(sub);
    auto b = enumerate_generic_residual_points(sub, 12345);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].coords == b[i].coords);
  }
}
