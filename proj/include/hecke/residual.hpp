#pragma once

#include "hecke/linform.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weyl_group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// Fixed generic positive sample used to pick dominant representatives:
/// k1 = 1, k2 = 141421356/100000000, every other symbol 1.
ParamVector generic_sample(const std::vector<std::string>& symbols);

struct GenericResidualPoint {
  SubsystemPtr subsystem;
  std::vector<LinForm> coords;  // values a_i on the parent simple roots
  std::vector<LinForm> xi;      // ambient coordinates
  std::vector<int> defining_roots;

  const RootSystem& parent() const { return *subsystem->parent; }
  LinForm value(int root) const { return parent().value(root, coords); }
  std::string coords_string() const { return to_string(coords); }
};

struct ResidualIndex {
  int matches = 0;
  int zeros = 0;
  std::string at = "generic";

  int excess() const { return matches - zeros; }
};

/// Points with sub-dominant representatives, one per orbit of the subsystem's
/// Weyl group, in canonical order (descending norm at the sample, then text).
/// The optional seed shuffles the internal subset order.
std::vector<GenericResidualPoint> enumerate_generic_residual_points(const SubsystemPtr& sub,
                                                                    std::optional<std::uint64_t> shuffle_seed = {});

/// Counts over all roots of the subsystem; "generic" uses identity of forms.
ResidualIndex residual_index(const GenericResidualPoint& p);
ResidualIndex residual_index(const GenericResidualPoint& p, const ParamVector& at);

/// True when matches - zeros >= rank at the given parameters.
bool is_residual_at(const GenericResidualPoint& p, const ParamVector& at);

const std::vector<LinForm>& coweight_coordinates(const GenericResidualPoint& p);

/// Ambient vector sum_i a_i w_i for coordinates a.
std::vector<LinForm> ambient_from_coords(const RootSystem& rs, const std::vector<LinForm>& a);

/// Squared length of xi at a parameter vector.
Rational norm_at(const GenericResidualPoint& p, const ParamVector& at);

/// w(p) for an element of a group acting on the parent (the subsystem moves along).
GenericResidualPoint conjugate(const GenericResidualPoint& p, const WeylGroup& w, std::size_t element);

/// Some element w with w(a) = b as forms, if any.
std::optional<std::size_t> conjugating_element(const WeylGroup& w, const std::vector<LinForm>& a,
                                               const std::vector<LinForm>& b);

}  // namespace hecke
