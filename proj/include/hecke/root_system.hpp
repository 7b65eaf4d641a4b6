#pragma once

#include "hecke/linform.hpp"
#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

using RatVector = std::vector<Rational>;
using Coeffs = std::vector<int>;

/// A reduced crystallographic root system in a fixed ambient realization.
///
/// Roots are indexed so that positive roots come first, ordered by height and
/// then by descending coefficient vector; index i < rank is the i-th simple
/// root; index i + npos is the negative of root i.
struct RootSystem {
  std::string type_tag;
  int rank = 0;
  int ambient_dim = 0;
  RatMatrix gram;
  std::vector<RatVector> roots;
  std::vector<Coeffs> coeffs;
  std::vector<int> simple;
  std::vector<std::string> length_class;  // "long" or "short"
  std::vector<std::string> param_label;
  std::vector<Rational> norm2;
  IntMatrix cartan;  // cartan(i, j) = <alpha_i, alpha_j^vee>
  std::map<Coeffs, int> index;

  int size() const { return static_cast<int>(roots.size()); }
  int positive_count() const { return size() / 2; }
  bool is_positive(int i) const { return i < positive_count(); }
  int negative(int i) const { return is_positive(i) ? i + positive_count() : i - positive_count(); }
  int height(int i) const;

  /// -1 when the coefficient vector is not a root.
  int find(const Coeffs& c) const;

  Rational inner(const RatVector& a, const RatVector& b) const;

  /// <beta_i, beta_j^vee> = 2 (beta_i, beta_j) / (beta_j, beta_j).
  int pairing(int i, int j) const;

  /// beta(xi) for xi given by its values a_k on the simple roots.
  LinForm value(int i, const std::vector<LinForm>& a) const;
  Rational value(int i, const RatVector& a) const;

  /// Image of root i under the reflection in root j.
  int reflect(int i, int j) const;

  /// Parameter symbol as a LinForm.
  LinForm k(int i) const { return LinForm::symbol(param_label[i]); }

  /// Symbols used by this system's labels, sorted.
  std::vector<std::string> parameter_symbols() const;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// type_tag in {G2, F4, Cn-datum, An, Bn, Dn}; rank in 1..8 within each type's range.
RootSystemPtr build_root_system(const std::string& type_tag, int rank);

/// Normalizes user spellings ("g2", "f4", "cn", "a", ...) to a canonical tag.
std::string canonical_type_tag(const std::string& text);

/// Ambient vectors w_i with (alpha_j, w_i) = delta_ij inside the root span.
std::vector<RatVector> fundamental_coweights(const RootSystem& rs);

/// Type of the root subsystem spanned by the given simple roots, e.g. "C3+A1".
std::string identify_type(const RootSystem& rs, const std::vector<int>& simple_roots);

/// Simple roots of a closed subsystem with respect to the parent's positivity.
std::vector<int> subsystem_simple_roots(const RootSystem& rs, const std::vector<int>& roots);

std::size_t rank_of_roots(const RootSystem& rs, const std::vector<int>& roots);

/// Full-rank root subsystem together with a torsion point realizing it.
struct Subsystem {
  RootSystemPtr parent;
  std::vector<int> root_indices;  // sorted parent indices
  std::vector<int> positive;      // parent-positive members
  std::vector<int> simple;
  std::string type_tag;
  std::map<int, LinForm> induced_k;
  RatVector kac_point;  // values on the parent simple roots
  int kac_denominator = 1;

  int rank() const { return parent->rank; }
  bool contains(int i) const;
  const LinForm& k(int i) const { return induced_k.at(i); }
};

using SubsystemPtr = std::shared_ptr<const Subsystem>;

/// Integral roots of the kac point, packaged as a subsystem.
SubsystemPtr make_subsystem(RootSystemPtr parent, const RatVector& kac_point);

/// The whole system as its own pseudo-Levi (kac point 0).
SubsystemPtr full_subsystem(RootSystemPtr parent);

/// Full-rank pseudo-Levi subsystems up to conjugacy, sorted by tag and then
/// by root list. Only G2 and F4 are supported.
std::vector<SubsystemPtr> pseudo_levi_subsystems(RootSystemPtr rs);

/// Maps table notation ("1", "A_2", "2A_1", "C_3A_1", ...) onto subsystem tags.
std::string subsystem_tag_from_table(const std::string& s_cell, const RootSystem& parent);

}  // namespace hecke
