#include "hecke/tables.hpp"

#include "hecke/errors.hpp"
#include "hecke/mass_function.hpp"
#include "hecke/weyl_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace hecke {

namespace {

struct RawEntry {
  const char* label;
  int epsilon;  // 0 for non-ds
};

struct RawRow {
  const char* label;
  const char* s;
  const char* coords;
  const char* d_b;
  RawEntry cols[3];
};

constexpr RawRow kG2[] = {
    {"b1", "1", "[k1, k2]", "1", {{"[G2,1]", 1}, {"[A2E6,theta]", 1}, {"E6", 1}}},
    {"b2", "1", "[k1, -k1+k2]", "1", {{"[G2(a1),(21)]", -1}, {"[A2E6(a1),theta]", -1}, {"E6(a1)", -1}}},
    {"b3", "1", "[k1, -k1/2+k2/2]", "1/2", {{"[G2(a1),(3)]", 1}, {"[A2E6(a3),theta]", 1}, {"E6(a3)", 1}}},
    {"b4", "2A_1", "[-k1/2-3k2/2, k2]", "1/2", {{"[2A1,1]", 1}, {"[A1A2A5,theta]", 1}, {"A1A5", 1}}},
    {"b5", "A_2", "[k1, -k1]", "1/3", {{"[A2,1]", 1}, {"[A8,theta]", 1}, {"A2^3", 1}}},
};

constexpr RawRow kF4[] = {
    {"b1", "1", "[k1, k1, k2, k2]", "1", {{"[F4,1]", 1}, {"[A1E7,-]", 1}, {"E7", 1}}},
    {"b2", "1", "[k1, k1, k2-k1, k2]", "1", {{"[F4(a1),-]", -1}, {"[A1E7(a4),--]", -1}, {"E7(a1)", -1}}},
    {"b3", "1", "[k1, k1, k2-k1, k1]", "1", {{"[F4(a1),+]", 1}, {"[A1E7(a2),-]", 1}, {"E7(a2)", 1}}},
    {"b4", "1", "[k1, k1, k2-2k1, k2]", "1", {{"[F4(a3),(211)]", 1}, {"[A1E7(a3),+-]", 1}, {"E7(a3)", 1}}},
    {"b5", "1", "[k1, k1, k2-2k1, 2k1]", "1", {{"[F4(a2),+]", 1}, {"[A1E7(a3),-+]", -1}, {"E7(a3)", -1}}},
    {"b6", "1", "[k1, k1, k2-2k1, k1]", "1", {{"[F4(a3),(31)]", -1}, {"[A1E7(a4),+-]", 1}, {"E7(a4)", 1}}},
    {"b7", "1", "[k1, k1, k2-2k1, -2k2]", "1", {{"[F4(a2),-]", -1}, {"[A1E7(a1),-]", -1}, {"E7(a4)", -1}}},
    {"b8", "1", "[0, k1, 0, k2-k1]", "1/6", {{"[F4(a3),(4)]", 1}, {"[A1E7(a5),-3]", 1}, {"E7(a5)", 1}}},
    {"b9", "1", "[0, k1, 0, k2-k1]", "1/3", {{"[F4(a3),(22)]", 1}, {"[A1E7(a5),-21]", 1}, {"E7(a5)", 1}}},
    {"b10", "B_4", "[k1/2, k1, k2, -3k1-2k2]", "1/2", {{"[B4,+]", 1}, {"[D8,-]", 1}, {"A1D6", 1}}},
    {"b11", "B_4", "[2k1, -k1, k2, -k1-2k2]", "1/2", {{"non-ds", 0}, {"[D8(5,11),-]", 1}, {"A1D6(3,9)", -1}}},
    {"b12", "B_4", "[0, k1, -k1+k2, -2k2]", "1/2", {{"[B4(531),eps'']", -1}, {"[D8(1,3,5,7),r]", 1}, {"A1D6(5,7)", -1}}},
    {"b13", "B_4", "[k1, k1, -2k1+k2, k1-2k2]", "1/2", {{"[B4(531),1]", 1}, {"[D8(7,9),-]", -1}, {"non-ds", 0}}},
    {"b14", "B_4", "[k1, k1, -3k1+k2, 3k1-2k2]", "1/2", {{"[B4(531),eps']", -1}, {"[D8(3,13),-]", -1}, {"non-ds", 0}}},
    {"b15", "C_3A_1", "[-2k1-3k2, k1, k2, k2]", "1/2", {{"[C3xA1,+]", 1}, {"[A3D5,-1]", 1}, {"A1D6", 1}}},
    {"b16", "C_3A_1", "[-2k1, k1, -k2, 2k2]", "1/2", {{"[C3(42)xA1,++]", 1}, {"[A3D5(3,7),-1]", -1}, {"A1D6(5,7)", 1}}},
    {"b17", "C_3A_1", "[-2k1+3k2, k1, -k2, -k2]", "1/2", {{"[C3(42)xA1,+-]", -1}, {"non-ds", 0}, {"A1D6(3,9)", -1}}},
    {"b18", "2A_2", "[k1, -k1-2k2, k2, k2]", "1/3", {{"[2A2,1]", 1}, {"[A1A2A5,-1]", 1}, {"A2A5", 1}}},
    {"b19", "A_3A_1", "[k1, k1, -3k1/2-k2/2, k2]", "1/4", {{"[A1A3,1]", 1}, {"[A1A7,-]", 1}, {"A1A3^2", 1}}},
};

std::vector<LinForm> parse_cell(const std::string& cell) {
  std::string body = cell.substr(1, cell.size() - 2);
  std::vector<LinForm> out;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    out.push_back(LinForm::parse(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <std::size_t N>
Table build(const std::string& type, const RawRow (&raw)[N], std::vector<std::string> columns) {
  Table t;
  t.type = type;
  t.column_names = std::move(columns);
  for (const auto& r : raw) {
    TableRow row;
    row.label = r.label;
    row.s_cell = r.s;
    row.coords_cell = r.coords;
    row.coords = parse_cell(r.coords);
    row.d_b = parse_rational(r.d_b);
    for (const auto& c : r.cols)
      row.columns.push_back({c.label, c.epsilon == 0 ? std::nullopt : std::optional<int>(c.epsilon)});
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table make_f4() {
  Table t = build("F4", kF4, {"F4", "D4_in_E8", "2E7"});
  for (auto& row : t.rows)
    if (row.label == "b10") {
      row.corrected_coords = parse_cell("[k1, k1, k2, -3k1-2k2]");
      row.erratum =
          "printed first coordinate k1/2 gives no residual point for any pseudo-Levi; "
          "with first coordinate k1 the cell lies in the W0-orbit of the B4 point [k1, k1, k2, -k2]";
    }
  return t;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string type_key(const std::string& type) {
  std::string t = lower(type);
  if (t == "g2") return "G2";
  if (t == "f4") return "F4";
  throw UsageError("tables exist for g2 and f4 only, not '" + type + "'");
}

}  // namespace

const TableRow& Table::row(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return r;
  throw UsageError("no row '" + label + "' in the " + type + " table");
}

const Table& load_table(const std::string& type) {
  static const Table g2 = build("G2", kG2, {"G2", "E6_in_E8", "3E6"});
  static const Table f4 = make_f4();
  return type_key(type) == "G2" ? g2 : f4;
}

std::string canonical_text(const Table& t) {
  std::string out = t.type;
  for (const auto& c : t.column_names) out += "\t" + c;
  out += "\n";
  for (const auto& r : t.rows) {
    out += r.label + "\t" + r.s_cell + "\t" + to_string(r.coords) + "\t" + to_string(r.d_b);
    for (const auto& c : r.columns) out += "\t" + c.label + "\t" + (c.epsilon ? std::to_string(*c.epsilon) : "");
    out += "\n";
  }
  return out;
}

std::string table_checksum(const Table& t) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical_text(t)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<GenericResidualPoint>& all_generic_residual_points(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<std::vector<GenericResidualPoint>>> cache;
  const std::string key = type_key(type);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) {
    slot = std::make_unique<std::vector<GenericResidualPoint>>();
    auto rs = build_root_system(key, key == "G2" ? 2 : 4);
    for (const auto& sub : pseudo_levi_subsystems(rs))
      for (auto& p : enumerate_generic_residual_points(sub)) slot->push_back(std::move(p));
  }
  return *slot;
}

namespace {

const WeylGroup& parent_group(const std::string& key) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<WeylGroup>(all_generic_residual_points(key).front().subsystem->parent);
  return *slot;
}

std::vector<std::size_t> matching_points(const std::string& key, const TableRow& row) {
  const auto& points = all_generic_residual_points(key);
  const WeylGroup& w = parent_group(key);
  const std::string tag = subsystem_tag_from_table(row.s_cell, w.root_system());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].subsystem->type_tag == tag && conjugating_element(w, points[i].coords, row.effective_coords()))
      out.push_back(i);
  return out;
}

}  // namespace

const GenericResidualPoint& point_for_row(const std::string& type, const std::string& label) {
  const std::string key = type_key(type);
  const TableRow& row = load_table(key).row(label);
  auto found = matching_points(key, row);
  if (found.size() != 1)
    throw PreconditionError("row " + label + " matches " + std::to_string(found.size()) + " enumerated orbits");
  return all_generic_residual_points(key)[found.front()];
}

std::vector<std::string> residual_subsystems_for(const std::string& type, const std::vector<LinForm>& coords) {
  const std::string key = type_key(type);
  const WeylGroup& w = parent_group(key);
  auto parent = all_generic_residual_points(key).front().subsystem->parent;
  if (coords.size() != static_cast<std::size_t>(parent->rank)) throw UsageError("coordinate count differs from the rank");
  std::vector<std::string> out;
  std::set<std::vector<int>> seen;
  for (const auto& sub : pseudo_levi_subsystems(parent))
    for (std::size_t e = 0; e < w.order(); ++e) {
      auto conj = make_subsystem(parent, w.act_on_coords(e, sub->kac_point));
      if (!seen.insert(conj->root_indices).second) continue;
      GenericResidualPoint p;
      p.subsystem = conj;
      p.coords = coords;
      if (residual_index(p).excess() == parent->rank) out.push_back(conj->type_tag);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ReconcileReport::bijection() const {
  if (!unmatched_rows.empty() || !unmatched_points.empty()) return false;
  std::size_t extra = 0;
  for (const auto& g : shared_cells) extra += g.size() - 1;
  return matches.size() == row_count && orbit_count + extra == row_count;
}

ReconcileReport reconcile(const std::string& type) {
  const std::string key = type_key(type);
  const Table& table = load_table(key);
  const auto& points = all_generic_residual_points(key);
  const RootSystem& rs = points.front().parent();

  ReconcileReport rep;
  rep.type = key;
  rep.row_count = table.rows.size();
  rep.orbit_count = points.size();

  std::map<std::size_t, std::vector<std::string>> rows_of_point;
  ParamVector split{{"k1", Rational(1)}, {"k2", Rational(1)}};
  for (const auto& row : table.rows) {
    if (!row.erratum.empty()) rep.errata.push_back(row.label + ": " + row.erratum);
    auto found = matching_points(key, row);
    if (found.size() != 1) {
      rep.unmatched_rows.push_back(row.label);
      continue;
    }
    const GenericResidualPoint& p = points[found.front()];
    rows_of_point[found.front()].push_back(row.label);
    OrbitMatch m;
    m.row = row.label;
    m.table_subsystem = subsystem_tag_from_table(row.s_cell, rs);
    m.subsystem = p.subsystem->type_tag;
    m.point = p.coords_string();
    m.subsystem_agrees = m.table_subsystem == m.subsystem;
    rep.matches.push_back(m);

    SignCheck s;
    s.row = row.label;
    s.table_sign = row.columns.front().epsilon;
    s.table_non_ds = row.columns.front().non_ds();
    auto g = GradedSign(p).evaluate(split);
    s.recomputed = g.sign;
    RegularizedValue mv = evaluate_checked(mass_function(p), split, Rational(2));
    s.vanishing_order = mv.vanishing_order;
    s.mass_value = to_string(mv.value, 25);
    if (s.table_non_ds)
      s.agrees = s.recomputed == 0 && mv.value == 0 && mv.vanishing_order > 0;
    else
      s.agrees = s.table_sign && *s.table_sign == s.recomputed && mv.sign() == s.recomputed;
    if (!s.agrees) rep.sign_discrepancies.push_back(row.label);
    rep.signs.push_back(s);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = rows_of_point.find(i);
    if (it == rows_of_point.end())
      rep.unmatched_points.push_back(points[i].subsystem->type_tag + " " + points[i].coords_string());
    else if (it->second.size() > 1)
      rep.shared_cells.push_back(it->second);
  }

  std::vector<std::string> order;
  std::map<std::string, LedgerEntry> ledger;
  for (const auto& sub : pseudo_levi_subsystems(points.front().subsystem->parent)) {
    WeylGroup w(sub->parent, sub->simple);
    LedgerEntry& e = ledger[sub->type_tag];
    if (e.subsystem.empty()) order.push_back(sub->type_tag);
    e.subsystem = sub->type_tag;
    e.elliptic_classes += elliptic_class_count(conjugacy_classes(w));
  }
  for (const auto& p : points) ledger[p.subsystem->type_tag].orbits++;
  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return ledger[a].elliptic_classes > ledger[b].elliptic_classes;
  });
  for (const auto& tag : order) {
    rep.ledger.push_back(ledger[tag]);
    rep.ledger_total += ledger[tag].elliptic_classes;
  }
  return rep;
}

}  // namespace hecke
