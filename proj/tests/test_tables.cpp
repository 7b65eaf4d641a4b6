#include "hecke/tables.hpp"

#include <doctest.h>

using namespace hecke;

TEST_CASE("table contents") {
  const auto& g2 = load_table("g2");
  const auto& f4 = load_table("f4");
  CHECK(g2.rows.size() == 5);
  CHECK(f4.rows.size() == 19);
  const auto& b5 = g2.row("b5");
  CHECK(b5.s_cell == "A_2");
  CHECK(to_string(b5.coords) == "[k1, -k1]");
  CHECK(b5.d_b == Rational(1) / 3);
  CHECK(to_string(f4.row("b8").coords) == "[0, k1, 0, -k1 + k2]");
  CHECK(f4.row("b8").coords == f4.row("b9").coords);
  CHECK(f4.row("b8").d_b == Rational(1) / 6);
  CHECK(f4.row("b9").d_b == Rational(1) / 3);
  CHECK(f4.row("b11").columns[0].non_ds());
  CHECK_THROWS_AS(g2.row("b6"), UsageError);
}

TEST_CASE("pinned checksums") {
  CHECK(table_checksum(load_table("g2")) == "bf3cdac61fe9eddf");
  CHECK(table_checksum(load_table("F4")) == "d5412f9e76c164dc");
  CHECK(canonical_text(load_table("g2")) == canonical_text(load_table("G2")));
}

TEST_CASE("printed b10 cell is not residual; the corrected cell is a B4 point") {
  const auto& b10 = load_table("f4").row("b10");
  CHECK(residual_subsystems_for("f4", b10.coords).empty());
  REQUIRE(b10.corrected_coords);
  CHECK(residual_subsystems_for("f4", *b10.corrected_coords) == std::vector<std::string>{"B4"});
}

TEST_CASE("G2 reconciliation") {
  auto rep = reconcile("g2");
  CHECK(rep.bijection());
  CHECK(rep.orbit_count == 5);
  CHECK(rep.shared_cells.empty());
  CHECK(rep.sign_discrepancies.empty());
  std::vector<int> signs;
  for (const auto& s : rep.signs) signs.push_back(s.recomputed);
  CHECK(signs == std::vector<int>{1, -1, 1, 1, 1});
  CHECK(rep.ledger_total == 5);
}

TEST_CASE("F4 reconciliation") {
  auto rep = reconcile("f4");
  CHECK(rep.bijection());
  CHECK(rep.orbit_count == 18);
  CHECK(rep.shared_cells == std::vector<std::vector<std::string>>{{"b8", "b9"}});
  CHECK(rep.sign_discrepancies.empty());
  CHECK(rep.errata.size() == 1);
  std::vector<std::size_t> ledger;
  for (const auto& e : rep.ledger) ledger.push_back(e.elliptic_classes);
  CHECK(ledger == std::vector<std::size_t>{9, 5, 3, 1, 1});
  CHECK(rep.ledger_total == 19);
  for (const auto& m : rep.matches) CHECK(m.subsystem_agrees);
}
