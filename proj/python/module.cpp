#include "hecke/acceptance.hpp"
#include "hecke/cli.hpp"
#include "hecke/cn_family.hpp"
#include "hecke/errors.hpp"
#include "hecke/mass_function.hpp"
#include "hecke/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hecke;

namespace {

ParamVector params_from(const std::map<std::string, std::string>& at) {
  ParamVector out;
  for (const auto& [k, v] : at) out[k] = parse_rational(v);
  return out;
}

std::vector<std::string> strings(const std::vector<LinForm>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

py::dict point_dict(const GenericResidualPoint& p) {
  py::dict d;
  d["subsystem"] = p.subsystem->type_tag;
  d["coords"] = strings(p.coords);
  d["coweight_coords"] = strings(coweight_coordinates(p));
  d["defining_roots"] = p.defining_roots;
  return d;
}

py::dict regularized(const RegularizedValue& r) {
  py::dict d;
  d["value"] = to_string(r.value, 30);
  d["sign"] = r.sign();
  d["vanishing_order"] = r.vanishing_order;
  d["vanishing_numerator"] = r.vanishing_numerator;
  d["vanishing_denominator"] = r.vanishing_denominator;
  return d;
}

std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(to_string(m(r, c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hecke, m) {
  m.doc() = "Discrete-series invariants of affine Hecke algebras";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));

  m.def("elliptic_class_count", [](const std::string& type, int rank) {
    WeylGroup w(build_root_system(canonical_type_tag(type), rank));
    return elliptic_class_count(conjugacy_classes(w));
  }, py::arg("type"), py::arg("rank"));

  m.def("residual_points", [](const std::string& type) {
    py::list out;
    for (const auto& p : all_generic_residual_points(type)) out.append(point_dict(p));
    return out;
  }, py::arg("type"));

  m.def("point_for_row", [](const std::string& type, const std::string& row) {
    return point_dict(point_for_row(type, row));
  }, py::arg("type"), py::arg("row"));

  m.def("mass", [](const std::string& type, const std::string& row, const std::map<std::string, std::string>& at,
                   const std::string& v) {
    ensure_precision();
    return regularized(evaluate_checked(mass_function(point_for_row(type, row)), params_from(at), parse_rational(v)));
  }, py::arg("type"), py::arg("row"), py::arg("at"), py::arg("v") = "2");

  m.def("sign_graded", [](const std::string& type, const std::string& row, const std::map<std::string, std::string>& at) {
    return sign_graded(point_for_row(type, row), params_from(at));
  }, py::arg("type"), py::arg("row"), py::arg("at"));

  m.def("singular_locus", [](const std::string& type, const std::string& row) {
    return strings(singular_locus(mass_function(point_for_row(type, row))));
  }, py::arg("type"), py::arg("row"));

  m.def("reeder", [](const std::string& type, const std::string& row, const std::vector<std::string>& qs) {
    ensure_precision();
    ReederFunction r = reeder_m(point_for_row(type, row));
    py::dict d;
    d["formula"] = r.to_string();
    d["complete"] = r.complete;
    d["r_at_zero"] = to_string(r.r_at_zero());
    std::vector<std::string> values;
    for (const auto& q : qs) values.push_back(to_string(r.value(parse_rational(q)), 30));
    d["values"] = values;
    return d;
  }, py::arg("type"), py::arg("row"), py::arg("q") = std::vector<std::string>{"2", "3", "5"});

  m.def("bipartitions", [](int n) {
    std::vector<std::string> out;
    for (const auto& b : bipartitions(n)) out.push_back(b.to_string());
    return out;
  }, py::arg("n"));

  m.def("cn_module", [](const std::string& bp, const std::string& params) {
    CnModule mod = build_module(Bipartition::parse(bp), CnParams::parse(params));
    py::dict d;
    d["bipartition"] = mod.bp.to_string();
    d["dimension"] = mod.dimension();
    std::vector<std::vector<std::vector<std::string>>> theta, gens;
    for (const auto& t : mod.theta) theta.push_back(matrix_strings(t));
    for (const auto& g : mod.gens) gens.push_back(matrix_strings(g));
    d["theta"] = theta;
    d["gens"] = gens;
    d["relation_failures"] = relation_failures(mod);
    d["discrete_series"] = is_discrete_series(mod);
    return d;
  }, py::arg("bp"), py::arg("params"));

  m.def("fdeg_c", [](const std::string& bp, const std::string& m_plus, const std::string& m_minus, const std::string& v) {
    ensure_precision();
    auto b = Bipartition::parse(bp);
    Rational mp = parse_rational(m_plus), mm = parse_rational(m_minus);
    py::dict d = regularized(fdeg_C(b, mp, mm, parse_rational(v)));
    d["epsilon"] = epsilon_sign_C(b, mp, mm);
    return d;
  }, py::arg("bp"), py::arg("m_plus"), py::arg("m_minus"), py::arg("v") = "2");

  m.def("table_checksum", [](const std::string& type) { return table_checksum(load_table(type)); }, py::arg("type"));

  m.def("reconcile", [](const std::string& type) {
    ensure_precision();
    auto rep = reconcile(type);
    py::dict d;
    d["bijection"] = rep.bijection();
    d["row_count"] = rep.row_count;
    d["orbit_count"] = rep.orbit_count;
    d["shared_cells"] = rep.shared_cells;
    d["sign_discrepancies"] = rep.sign_discrepancies;
    d["errata"] = rep.errata;
    std::vector<int> signs;
    for (const auto& s : rep.signs) signs.push_back(s.recomputed);
    d["signs"] = signs;
    std::vector<std::pair<std::string, std::size_t>> ledger;
    for (const auto& e : rep.ledger) ledger.emplace_back(e.subsystem, e.elliptic_classes);
    d["ledger"] = ledger;
    d["ledger_total"] = rep.ledger_total;
    return d;
  }, py::arg("type"));

  m.def("acceptance", [](bool seedless, const std::vector<int>& only) {
    ensure_precision();
    AcceptanceOptions opt;
    opt.seedless = seedless;
    opt.only = only;
    py::list out;
    for (const auto& r : run_acceptance(opt)) {
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  }, py::arg("seedless") = false, py::arg("only") = std::vector<int>{});
}
