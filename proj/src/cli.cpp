#include "hecke/cli.hpp"

#include "hecke/acceptance.hpp"
#include "hecke/cn_family.hpp"
#include "hecke/errors.hpp"
#include "hecke/mass_function.hpp"
#include "hecke/residual.hpp"
#include "hecke/root_system.hpp"
#include "hecke/tables.hpp"
#include "hecke/weyl_group.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

namespace hecke::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kMd, kText };

struct Output {
  Json inputs = Json::object();
  Json result = Json::object();
  Json warnings = Json::array();
  std::string table_key;  // array inside result rendered as rows for csv/md
};

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Real& x) { return to_string(x, 30); }

Json forms(const std::vector<LinForm>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(f.to_string());
  return a;
}

Json params_json(const ParamVector& p) {
  Json o = Json::object();
  for (const auto& [k, v] : p) o[k] = str(v);
  return o;
}

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + cell_text(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : "; ") + it.key() + "=" + cell_text(it.value());
    return s;
  }
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

/// Header and rows of the table view of a result.
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> tabulate(const Output& o) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (!o.table_key.empty() && o.result.contains(o.table_key) && o.result[o.table_key].is_array()) {
    for (const auto& r : o.result[o.table_key]) {
      for (auto it = r.begin(); it != r.end(); ++it)
        if (std::find(header.begin(), header.end(), it.key()) == header.end()) header.push_back(it.key());
    }
    for (const auto& r : o.result[o.table_key]) {
      std::vector<std::string> row;
      for (const auto& h : header) row.push_back(r.contains(h) ? cell_text(r[h]) : "");
      rows.push_back(std::move(row));
    }
  } else {
    header = {"key", "value"};
    for (auto it = o.result.begin(); it != o.result.end(); ++it) rows.push_back({it.key(), cell_text(it.value())});
  }
  return {header, rows};
}

void render(const std::string& command, const Output& o, Format f, std::ostream& out) {
  if (f == Format::kJson || f == Format::kText) {
    Json env = Json::object();
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["inputs"] = o.inputs;
    env["result"] = o.result;
    env["warnings"] = o.warnings;
    out << env.dump(2) << "\n";
    return;
  }
  auto [header, rows] = tabulate(o);
  if (f == Format::kCsv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_quote(header[i]);
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_quote(r[i]);
      out << "\n";
    }
  } else {
    out << "|";
    for (const auto& h : header) out << " " << md_escape(h) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& r : rows) {
      out << "|";
      for (const auto& c : r) out << " " << md_escape(c) << " |";
      out << "\n";
    }
  }
  for (const auto& w : o.warnings) out << (f == Format::kCsv ? "# warning: " : "\n> warning: ") << w.get<std::string>() << "\n";
}

int default_rank(const std::string& tag, std::optional<int> rank) {
  if (rank) return *rank;
  if (tag == "G2") return 2;
  if (tag == "F4") return 4;
  throw UsageError("--rank is required for type " + tag);
}

std::string table_type(const std::string& text) {
  std::string tag = canonical_type_tag(text);
  if (tag != "G2" && tag != "F4") throw UsageError("tables exist only for g2 and f4, not '" + text + "'");
  return tag == "G2" ? "g2" : "f4";
}

Json word_json(const std::vector<int>& word) {
  Json a = Json::array();
  for (int g : word) a.push_back(g + 1);
  return a;
}

// root

Output cmd_root(const std::string& type, std::optional<int> rank_opt) {
  Output o;
  std::string tag = canonical_type_tag(type);
  int rank = default_rank(tag, rank_opt);
  auto rs = build_root_system(tag, rank);
  o.inputs = {{"type", tag}, {"rank", rank}};
  Json simple = Json::array();
  for (int i : rs->simple) {
    Json v = Json::array();
    for (const auto& x : rs->roots[i]) v.push_back(str(x));
    simple.push_back(v);
  }
  Json roots = Json::array();
  Json labels = Json::object();
  for (int i = 0; i < rs->size(); ++i) {
    Json v = Json::array(), c = Json::array();
    for (const auto& x : rs->roots[i]) v.push_back(str(x));
    for (int x : rs->coeffs[i]) c.push_back(x);
    roots.push_back({{"index", i},
                     {"coeffs", c},
                     {"vector", v},
                     {"norm2", str(rs->norm2[i])},
                     {"length", rs->length_class[i]},
                     {"param_label", rs->param_label[i]}});
    labels[rs->length_class[i]] = rs->param_label[i];
  }
  o.result = {{"type", tag}, {"rank", rank}, {"simple_roots", simple}, {"roots", roots}, {"param_labels", labels}};
  o.table_key = "roots";
  return o;
}

// elliptic

Output cmd_elliptic(const std::string& type, std::optional<int> rank_opt, bool per_subsystem) {
  Output o;
  std::string tag = canonical_type_tag(type);
  int rank = default_rank(tag, rank_opt);
  auto rs = build_root_system(tag, rank);
  o.inputs = {{"type", tag}, {"rank", rank}, {"per_subsystem", per_subsystem}};
  WeylGroup w(rs);
  auto cp = conjugacy_classes(w);
  Json classes = Json::array();
  for (std::size_t c = 0; c < cp.classes.size(); ++c) {
    const auto& cl = cp.classes[c];
    classes.push_back({{"class", c},
                       {"size", cl.members.size()},
                       {"representative", word_json(w.element(cl.representative).word)},
                       {"trace", cl.trace},
                       {"det_one_minus", cl.det_one_minus},
                       {"elliptic", cl.elliptic}});
  }
  o.result = {{"type", tag},
              {"group_order", w.order()},
              {"class_count", cp.classes.size()},
              {"elliptic_class_count", elliptic_class_count(cp)}};
  if (per_subsystem) {
    if (tag != "G2" && tag != "F4") throw UsageError("--per-subsystem is available for G2 and F4 only");
    Json per = Json::object();
    std::size_t total = 0;
    for (const auto& sub : pseudo_levi_subsystems(rs)) {
      WeylGroup ws(sub->parent, sub->simple);
      std::size_t n = elliptic_class_count(conjugacy_classes(ws));
      per[sub->type_tag] = (per.contains(sub->type_tag) ? per[sub->type_tag].get<std::size_t>() : 0) + n;
      total += n;
    }
    o.result["per_subsystem"] = per;
    o.result["per_subsystem_total"] = total;
  }
  o.result["classes"] = classes;
  o.table_key = "classes";
  return o;
}

// residual

Output cmd_residual(const std::string& type, const std::string& subsystem) {
  Output o;
  std::string t = table_type(type);
  o.inputs = {{"type", t == "g2" ? "G2" : "F4"}, {"subsystem", subsystem.empty() ? Json(nullptr) : Json(subsystem)}};
  Json rows = Json::array();
  bool found = subsystem.empty();
  for (const auto& p : all_generic_residual_points(t)) {
    std::string tag = p.subsystem->type_tag;
    bool full = p.subsystem->root_indices.size() == static_cast<std::size_t>(p.parent().size());
    if (!subsystem.empty() && subsystem != tag && !(subsystem == "full" && full)) continue;
    found = true;
    Json roots = Json::array();
    for (int r : p.defining_roots) roots.push_back(r);
    rows.push_back({{"subsystem", tag},
                    {"coords", forms(p.coords)},
                    {"coweight_coords", forms(coweight_coordinates(p))},
                    {"defining_roots", roots},
                    {"norm_at_sample", str(norm_at(p, generic_sample(p.parent().parameter_symbols())))}});
  }
  if (!found) throw UsageError("no pseudo-Levi subsystem with tag '" + subsystem + "'");
  auto rs = build_root_system(t == "g2" ? "G2" : "F4", t == "g2" ? 2 : 4);
  o.result = {{"type", o.inputs["type"]},
              {"dominance_sample", params_json(generic_sample(rs->parameter_symbols()))},
              {"count", rows.size()},
              {"points", rows}};
  o.table_key = "points";
  return o;
}

// mass and sign

Output cmd_mass(const std::string& type, const std::string& label, const std::string& at_text,
                const std::string& v_text, bool sign_only) {
  Output o;
  std::string t = table_type(type);
  ParamVector at = parse_param_vector(at_text);
  Rational v = parse_rational(v_text);
  if (v <= 0) throw UsageError("--v must be positive");
  o.inputs = {{"type", t == "g2" ? "G2" : "F4"}, {"b", label}, {"at", params_json(at)}, {"v", str(v)},
              {"sign_only", sign_only}};
  const auto& p = point_for_row(t, label);
  MassFunction m = mass_function(p);
  GradedSign g(p);
  auto gs = g.evaluate(at);
  o.result = {{"row", label},
              {"subsystem", p.subsystem->type_tag},
              {"coords", forms(p.coords)},
              {"sign_graded", gs.sign},
              {"graded_vanishing_order", gs.vanishing_order}};
  if (!sign_only) {
    RegularizedValue r = evaluate_checked(m, at, v);
    o.result["value"] = str(r.value);
    o.result["sign"] = r.sign();
    o.result["vanishing_order"] = r.vanishing_order;
    o.result["vanishing_numerator"] = r.vanishing_numerator;
    o.result["vanishing_denominator"] = r.vanishing_denominator;
    o.result["direction"] = params_json(r.direction_used);
    o.result["prefactor_exponent"] = m.prefactor.to_string();
    o.result["scalar"] = str(m.scalar);
    Json factors = Json::array();
    for (const auto& f : m.factors)
      factors.push_back({{"part", f.numerator ? "numerator" : "denominator"},
                         {"turns", str(f.turns)},
                         {"exponent", f.expo.to_string()}});
    o.result["factors"] = factors;
    if (r.sign() != 0 && r.sign() != gs.sign)
      o.warnings.push_back("graded sign and numeric sign differ at this point");
  }
  return o;
}

Output cmd_sign(const std::string& type, const std::string& label, const std::string& at_text) {
  Output o;
  std::string t = table_type(type);
  ParamVector at = parse_param_vector(at_text);
  o.inputs = {{"type", t == "g2" ? "G2" : "F4"}, {"b", label}, {"at", params_json(at)}};
  const auto& p = point_for_row(t, label);
  GradedSign g(p);
  auto r = g.evaluate(at);
  Json factors = Json::array();
  for (const auto& f : g.factors())
    factors.push_back({{"part", f.numerator ? "numerator" : "denominator"},
                       {"form", f.form.to_string()},
                       {"value", str(f.form.evaluate(at))}});
  o.result = {{"row", label},
              {"subsystem", p.subsystem->type_tag},
              {"sign", r.sign},
              {"vanishing_order", r.vanishing_order},
              {"vanishing_numerator", r.vanishing_numerator},
              {"vanishing_denominator", r.vanishing_denominator},
              {"direction", params_json(r.direction_used)},
              {"singular_locus", forms(singular_locus(mass_function(p)))},
              {"factors", factors}};
  o.table_key = "factors";
  return o;
}

// reeder

Output cmd_reeder(const std::string& type, const std::string& label, const std::string& q_text) {
  Output o;
  std::string t = table_type(type);
  std::vector<Rational> qs;
  std::stringstream ss(q_text);
  for (std::string item; std::getline(ss, item, ',');) {
    Rational q = parse_rational(item);
    if (q <= 1) throw UsageError("q values must exceed 1");
    qs.push_back(q);
  }
  Json qj = Json::array();
  for (const auto& q : qs) qj.push_back(str(q));
  o.inputs = {{"type", t == "g2" ? "G2" : "F4"}, {"b", label}, {"q", qj}};
  const auto& p = point_for_row(t, label);
  ParamVector ones;
  for (const auto& s : p.parent().parameter_symbols()) ones[s] = 1;
  if (!is_residual_at(p, ones))
    throw PreconditionError("row " + label + " is not a residual point at equal parameters");
  ReederFunction r = reeder_m(p);
  Json exps = Json::object();
  for (const auto& [n, e] : r.exponents) exps[std::to_string(n)] = e;
  Json values = Json::array();
  for (const auto& q : qs) {
    auto exact = r.exact_value(q);
    values.push_back({{"q", str(q)}, {"value", str(r.value(q))}, {"exact", exact ? Json(str(*exact)) : Json(nullptr)}});
  }
  o.result = {{"row", label},
              {"subsystem", p.subsystem->type_tag},
              {"formula", r.to_string()},
              {"t_root_of_q", r.root_denominator},
              {"scalar", str(r.scalar)},
              {"t_shift", r.t_shift},
              {"cyclotomic_exponents", exps},
              {"complete", r.complete},
              {"r_at_zero", str(r.r_at_zero())},
              {"values", values}};
  o.table_key = "values";
  return o;
}

// cn

Output cmd_cn(std::optional<int> n, const std::string& params_text, const std::string& bp_text, bool ds, bool cc,
              bool restrict, bool fdeg, const std::string& at_text, const std::string& v_text) {
  Output o;
  CnParams params = CnParams::parse(params_text);
  std::vector<Bipartition> bps;
  if (!bp_text.empty()) {
    Bipartition bp = Bipartition::parse(bp_text);
    if (n && *n != bp.size()) throw UsageError("--bp has size " + std::to_string(bp.size()) + ", not --n");
    bps.push_back(bp);
  } else {
    if (!n) throw UsageError("give --n or --bp");
    if (*n < 1 || *n > 8) throw UsageError("--n must lie in 1..8");
    bps = bipartitions(*n);
  }
  int rank = bps.front().size();
  if (rank < 1) throw UsageError("the bipartition must be non-empty");
  o.inputs = {{"n", rank}, {"params", params.to_string()}, {"bp", bp_text.empty() ? Json(nullptr) : Json(bp_text)},
              {"ds", ds}, {"cc", cc}, {"restrict", restrict}, {"fdeg", fdeg}};
  std::optional<ParamVector> fdeg_at;
  Rational v = 2;
  if (fdeg) {
    fdeg_at = parse_param_vector(at_text.empty() ? "m_plus=1,m_minus=1" : at_text);
    for (const char* s : {"m_plus", "m_minus"})
      if (!fdeg_at->count(s)) throw UsageError(std::string("--at must assign ") + s);
    v = parse_rational(v_text);
    if (v <= 0) throw UsageError("--v must be positive");
    o.inputs["at"] = params_json(*fdeg_at);
    o.inputs["v"] = str(v);
  }

  std::optional<WeylGroup> group;
  std::optional<ClassPartition> classes;
  if (restrict) {
    group.emplace(build_root_system("Cn-datum", rank));
    classes = conjugacy_classes(*group);
  }
  Json modules = Json::array();
  for (const auto& bp : bps) {
    Json row = Json::object();
    row["bipartition"] = bp.to_string();
    CnModule m = build_module(bp, params);
    row["dimension"] = m.dimension();
    row["relations"] = relation_failures(m).empty() ? "exact" : "failed";
    if (ds) row["discrete_series"] = is_discrete_series(m);
    if (cc) {
      Json entries = Json::array(), graded = Json::array();
      for (const auto& e : central_character_string(bp)) {
        entries.push_back(std::string(e.sign < 0 ? "-" : "") + "v^(" + e.exponent.to_string() + ")");
        graded.push_back(e.graded.to_string());
      }
      row["central_character"] = entries;
      row["graded_central_character"] = graded;
    }
    if (restrict) {
      auto r = restrict_to_weyl(bp, *group, *classes);
      Json cp = Json::array(), ch = Json::array();
      for (int x : r.compact_part) cp.push_back(x);
      for (const auto& x : r.character.values) ch.push_back(x.str());
      row["compact_part"] = cp;
      row["character"] = ch;
      row["character_norm"] = str(inner_product(r.character, r.character, *group, *classes));
    }
    if (fdeg) {
      const Rational& mp = fdeg_at->at("m_plus");
      const Rational& mm = fdeg_at->at("m_minus");
      row["epsilon"] = epsilon_sign_C(bp, mp, mm);
      row["fdeg"] = str(fdeg_C(bp, mp, mm, v).value);
    }
    modules.push_back(std::move(row));
  }
  o.result = {{"n", rank}, {"params", params.to_string()}, {"modules", modules}};
  o.table_key = "modules";
  return o;
}

// table

std::string entry_text(const TableEntry& e) {
  if (e.non_ds()) return "non-ds";
  return e.label + " (" + (e.epsilon && *e.epsilon > 0 ? "+" : "") + (e.epsilon ? std::to_string(*e.epsilon) : "") +
         ")";
}

Output cmd_table(const std::string& type, bool do_reconcile) {
  Output o;
  std::string t = table_type(type);
  const Table& table = load_table(t);
  o.inputs = {{"type", table.type}, {"reconcile", do_reconcile}};
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json row = Json::object();
    row["label"] = r.label;
    row["s"] = r.s_cell;
    row["coords"] = to_string(r.coords);
    row["d_b"] = str(r.d_b);
    for (std::size_t c = 0; c < table.column_names.size(); ++c) row[table.column_names[c]] = entry_text(r.columns[c]);
    rows.push_back(std::move(row));
    if (r.corrected_coords)
      o.warnings.push_back(r.label + ": " + r.erratum + "; using " + to_string(*r.corrected_coords));
  }
  o.result = {{"type", table.type}, {"checksum", table_checksum(table)}, {"rows", rows}};
  o.table_key = "rows";
  if (!do_reconcile) return o;

  auto rep = reconcile(t);
  Json matches = Json::array();
  for (const auto& m : rep.matches)
    matches.push_back({{"row", m.row},
                       {"table_subsystem", m.table_subsystem},
                       {"subsystem", m.subsystem},
                       {"point", m.point},
                       {"subsystem_agrees", m.subsystem_agrees}});
  Json signs = Json::array();
  for (const auto& s : rep.signs)
    signs.push_back({{"row", s.row},
                     {"table", s.table_non_ds ? Json("non-ds") : Json(*s.table_sign)},
                     {"recomputed", s.recomputed},
                     {"vanishing_order", s.vanishing_order},
                     {"mass_value", s.mass_value},
                     {"agrees", s.agrees}});
  Json ledger = Json::array();
  std::string equation;
  for (const auto& e : rep.ledger) {
    ledger.push_back({{"subsystem", e.subsystem}, {"elliptic_classes", e.elliptic_classes}, {"orbits", e.orbits}});
    equation += (equation.empty() ? "" : "+") + std::to_string(e.elliptic_classes);
  }
  equation += " = " + std::to_string(rep.ledger_total);
  Json shared = Json::array();
  for (const auto& s : rep.shared_cells) shared.push_back(s);
  o.result["reconcile"] = {{"bijection", rep.bijection()},
                           {"row_count", rep.row_count},
                           {"orbit_count", rep.orbit_count},
                           {"shared_cells", shared},
                           {"unmatched_rows", rep.unmatched_rows},
                           {"unmatched_points", rep.unmatched_points},
                           {"matches", matches},
                           {"signs", signs},
                           {"sign_discrepancies", rep.sign_discrepancies},
                           {"ledger", ledger},
                           {"ledger_equation", equation},
                           {"errata", rep.errata}};
  return o;
}

int cmd_accept(bool seedless, const std::vector<int>& only, Format f, std::ostream& out) {
  AcceptanceOptions opt;
  opt.seedless = seedless;
  opt.only = only;
  for (int id : only)
    if (id < 1 || id > kCriterionCount) throw UsageError("criterion ids lie in 1..11");
  auto results = run_acceptance(opt);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (f == Format::kText) {
    for (const auto& r : results) out << ledger_line(r) << "\n";
    out << (ok ? "all criteria passed" : "acceptance FAILED") << "\n";
  } else {
    Output o;
    Json ids = Json::array();
    for (int id : only) ids.push_back(id);
    o.inputs = {{"seedless", seedless}, {"only", ids}};
    Json rows = Json::array();
    for (const auto& r : results)
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    o.result = {{"passed", ok}, {"criteria", rows}};
    o.table_key = "criteria";
    render("accept", o, f, out);
  }
  return ok ? kOk : kAcceptanceFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ensure_precision();
  CLI::App app{"Discrete-series invariants of affine Hecke algebras", "hecke"};
  app.require_subcommand(1);

  bool json = false, csv = false, md = false;
  std::string format;
  auto add_format = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "JSON envelope (default)");
    sub->add_flag("--csv", csv, "CSV rendering");
    sub->add_flag("--md", md, "Markdown rendering");
    sub->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  };

  std::string type, label, at, v = "2", q = "2,3,5", params = "1000,2,2", bp, subsystem;
  std::optional<int> rank, n;
  bool per_subsystem = false, sign_only = false, ds = false, cc = false, restrict = false, fdeg = false,
       do_reconcile = false, seedless = false;
  std::vector<int> only;

  auto* root = app.add_subcommand("root", "Roots, simple roots and parameter labels");
  root->add_option("type", type, "G2, F4, Cn-datum, An, Bn, Dn")->required();
  root->add_option("--rank", rank, "Rank (fixed for G2 and F4)");
  add_format(root);

  auto* elliptic = app.add_subcommand("elliptic", "Conjugacy classes and elliptic classes of W0");
  elliptic->add_option("type", type)->required();
  elliptic->add_option("--rank", rank);
  elliptic->add_flag("--per-subsystem", per_subsystem, "Elliptic counts for every pseudo-Levi subsystem");
  add_format(elliptic);

  auto* residual = app.add_subcommand("residual", "Generic residual points up to W0");
  residual->add_option("type", type)->required();
  residual->add_option("--subsystem", subsystem, "Subsystem tag, or 'full'");
  add_format(residual);

  auto* mass = app.add_subcommand("mass", "Regularized mass function of a table row");
  mass->add_option("type", type)->required();
  mass->add_option("--b", label, "Row label, e.g. b2")->required();
  mass->add_option("--at", at, "k1=1,k2=1")->required();
  mass->add_option("--v", v, "Value of v (default 2)");
  mass->add_flag("--sign-only", sign_only);
  add_format(mass);

  auto* sign = app.add_subcommand("sign", "Sign of the graded expression of a table row");
  sign->add_option("type", type)->required();
  sign->add_option("--b", label)->required();
  sign->add_option("--at", at)->required();
  add_format(sign);

  auto* reeder = app.add_subcommand("reeder", "Equal-parameter formal degree in cyclotomic form");
  reeder->add_option("type", type)->required();
  reeder->add_option("--b", label)->required();
  reeder->add_option("--q", q, "Comma-separated q values (default 2,3,5)");
  add_format(reeder);

  auto* cn = app.add_subcommand("cn", "Three-parameter C_n modules indexed by bipartitions");
  cn->add_option("--n", n, "Rank");
  cn->add_option("--params", params, "v0,v1,v2 (default 1000,2,2)");
  cn->add_option("--bp", bp, "Bipartition 'lambda|mu', e.g. \"2,1|\"");
  cn->add_flag("--ds", ds, "Discrete-series test");
  cn->add_flag("--cc", cc, "Central character");
  cn->add_flag("--restrict", restrict, "Restriction to W0 at v = 1");
  cn->add_flag("--fdeg", fdeg, "Formal degree at --at m_plus=..,m_minus=.. and --v");
  cn->add_option("--at", at);
  cn->add_option("--v", v);
  add_format(cn);

  auto* table = app.add_subcommand("table", "Embedded G2 and F4 tables");
  table->add_option("type", type, "g2 or f4")->required();
  table->add_flag("--reconcile", do_reconcile, "Match rows with enumerated points and recompute signs");
  add_format(table);

  auto* accept = app.add_subcommand("accept", "Run the acceptance criteria");
  accept->add_flag("--seedless", seedless, "Deterministic sample sequences instead of a seeded generator");
  accept->add_option("--only", only, "Criterion ids")->delimiter(',');
  add_format(accept);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    int chosen = (json ? 1 : 0) + (csv ? 1 : 0) + (md ? 1 : 0) + (format.empty() ? 0 : 1);
    if (chosen > 1) throw UsageError("choose one of --json, --csv, --md, --format");
    Format f = Format::kJson;
    if (csv || format == "csv") f = Format::kCsv;
    if (md || format == "md") f = Format::kMd;

    auto* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (name == "accept") return cmd_accept(seedless, only, chosen ? f : Format::kText, out);

    Output o;
    if (name == "root") o = cmd_root(type, rank);
    else if (name == "elliptic") o = cmd_elliptic(type, rank, per_subsystem);
    else if (name == "residual") o = cmd_residual(type, subsystem);
    else if (name == "mass") o = cmd_mass(type, label, at, v, sign_only);
    else if (name == "sign") o = cmd_sign(type, label, at);
    else if (name == "reeder") o = cmd_reeder(type, label, q);
    else if (name == "cn") o = cmd_cn(n, params, bp, ds, cc, restrict, fdeg, at, v);
    else if (name == "table") o = cmd_table(type, do_reconcile);
    render(name, o, f, out);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace hecke::cli
