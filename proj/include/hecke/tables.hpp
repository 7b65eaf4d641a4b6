#pragma once

#include "hecke/linform.hpp"
#include "hecke/residual.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

struct TableEntry {
  std::string label;           // "non-ds" when the family is not discrete series there
  std::optional<int> epsilon;  // empty for non-ds cells

  bool non_ds() const { return label == "non-ds"; }
};

struct TableRow {
  std::string label;  // b1, b2, ...
  std::string s_cell; // as printed: "1", "2A_1", "C_3A_1", ...
  std::string coords_cell;
  std::vector<LinForm> coords;
  Rational d_b;
  std::vector<TableEntry> columns;
  /// Corrected coordinates when the printed cell is not a residual point.
  std::optional<std::vector<LinForm>> corrected_coords;
  std::string erratum;

  const std::vector<LinForm>& effective_coords() const { return corrected_coords ? *corrected_coords : coords; }
};

struct Table {
  std::string type;  // "G2" or "F4"
  std::vector<std::string> column_names;
  std::vector<TableRow> rows;

  const TableRow& row(const std::string& label) const;
};

/// "g2" or "f4" in any case.
const Table& load_table(const std::string& type);

/// Tab-separated canonical text of the printed data (corrections excluded).
std::string canonical_text(const Table& t);

/// FNV-1a 64 of canonical_text, as 16 lowercase hex digits.
std::string table_checksum(const Table& t);

/// Every generic residual point of every pseudo-Levi subsystem, cached per type.
const std::vector<GenericResidualPoint>& all_generic_residual_points(const std::string& type);

/// The enumerated point in the Weyl orbit of a row's effective coordinates.
const GenericResidualPoint& point_for_row(const std::string& type, const std::string& label);

/// Subsystem tags of the pseudo-Levi conjugates for which the coordinates are a
/// generic residual point; empty when the cell is not residual at all.
std::vector<std::string> residual_subsystems_for(const std::string& type, const std::vector<LinForm>& coords);

struct OrbitMatch {
  std::string row;
  std::string table_subsystem;
  std::string subsystem;
  std::string point;
  bool subsystem_agrees = false;
};

struct SignCheck {
  std::string row;
  std::optional<int> table_sign;
  bool table_non_ds = false;
  int recomputed = 0;
  int vanishing_order = 0;
  std::string mass_value;
  bool agrees = false;
};

struct LedgerEntry {
  std::string subsystem;
  std::size_t elliptic_classes = 0;
  std::size_t orbits = 0;
};

struct ReconcileReport {
  std::string type;
  std::vector<OrbitMatch> matches;
  std::vector<std::string> unmatched_rows;
  std::vector<std::string> unmatched_points;
  std::vector<std::vector<std::string>> shared_cells;
  std::vector<SignCheck> signs;
  std::vector<std::string> sign_discrepancies;
  std::vector<LedgerEntry> ledger;
  std::size_t ledger_total = 0;
  std::size_t row_count = 0;
  std::size_t orbit_count = 0;
  std::vector<std::string> errata;

  /// Rows and orbits correspond one to one except for rows sharing a printed cell.
  bool bijection() const;
};

ReconcileReport reconcile(const std::string& type);

}  // namespace hecke
