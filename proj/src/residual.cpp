#include "hecke/residual.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace hecke {

namespace {

constexpr int kMaxEnumerationRank = 4;

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> greedy_basis(const RootSystem& rs, const std::vector<int>& candidates) {
  std::vector<int> basis;
  for (int r : candidates) {
    basis.push_back(r);
    if (rank_of_roots(rs, basis) < basis.size()) basis.pop_back();
    if (static_cast<int>(basis.size()) == rs.rank) break;
  }
  return basis;
}

}  // namespace

ParamVector generic_sample(const std::vector<std::string>& symbols) {
  ParamVector at;
  for (const auto& s : symbols) at[s] = Rational(1);
  at["k1"] = Rational(1);
  at["k2"] = Rational(141421356, 100000000);
  return at;
}

std::vector<LinForm> ambient_from_coords(const RootSystem& rs, const std::vector<LinForm>& a) {
  auto w = fundamental_coweights(rs);
  std::vector<LinForm> xi(rs.ambient_dim);
  for (int i = 0; i < rs.rank; ++i)
    for (int d = 0; d < rs.ambient_dim; ++d)
      if (w[i][d] != 0) xi[d] += a[i] * w[i][d];
  return xi;
}

Rational norm_at(const GenericResidualPoint& p, const ParamVector& at) {
  RatVector v;
  for (const auto& x : p.xi) v.push_back(x.evaluate(at));
  return p.parent().inner(v, v);
}

std::vector<GenericResidualPoint> enumerate_generic_residual_points(const SubsystemPtr& sub,
                                                                    std::optional<std::uint64_t> shuffle_seed) {
  const RootSystem& rs = *sub->parent;
  const int n = rs.rank;
  if (n > kMaxEnumerationRank) throw PreconditionError("residual enumeration is limited to rank 4");

  std::vector<int> pos = sub->positive;
  std::vector<std::vector<int>> subsets;
  combinations(static_cast<int>(pos.size()), n, subsets);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(subsets.begin(), subsets.end(), rng);
    std::shuffle(pos.begin(), pos.end(), rng);
  }

  ParamVector sample = generic_sample(rs.parameter_symbols());
  std::set<std::vector<LinForm>> seen;
  std::vector<GenericResidualPoint> out;

  for (const auto& subset : subsets) {
    RatMatrix c(n, n);
    for (int r = 0; r < n; ++r)
      for (int i = 0; i < n; ++i) c(r, i) = rs.coeffs[pos[subset[r]]][i];
    auto inv = inverse(c);
    if (!inv) continue;
    std::vector<LinForm> a(n);
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r)
        if ((*inv)(i, r) != 0) a[i] += sub->k(pos[subset[r]]) * (*inv)(i, r);

    int matches = 0, zeros = 0;
    for (int r : sub->root_indices) {
      LinForm v = rs.value(r, a);
      if (v == sub->k(r)) ++matches;
      if (v.is_zero()) ++zeros;
    }
    if (matches - zeros != n) continue;

    bool dominant = true;
    for (int s : sub->simple)
      if (rs.value(s, a).evaluate(sample) < 0) dominant = false;
    if (!dominant || !seen.insert(a).second) continue;

    GenericResidualPoint p;
    p.subsystem = sub;
    p.coords = a;
    p.xi = ambient_from_coords(rs, a);
    std::vector<int> matched;
    for (int r : sub->positive)
      if (rs.value(r, a) == sub->k(r)) matched.push_back(r);
    p.defining_roots = greedy_basis(rs, matched);
    out.push_back(std::move(p));
  }

  std::vector<std::pair<Rational, std::string>> keys;
  for (const auto& p : out) keys.emplace_back(norm_at(p, sample), p.coords_string());
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (keys[x].first != keys[y].first) return keys[x].first > keys[y].first;
    return keys[x].second < keys[y].second;
  });
  std::vector<GenericResidualPoint> sorted;
  for (std::size_t i : order) sorted.push_back(out[i]);
  return sorted;
}

ResidualIndex residual_index(const GenericResidualPoint& p) {
  ResidualIndex idx;
  for (int r : p.subsystem->root_indices) {
    LinForm v = p.value(r);
    if (v == p.subsystem->k(r)) ++idx.matches;
    if (v.is_zero()) ++idx.zeros;
  }
  return idx;
}

ResidualIndex residual_index(const GenericResidualPoint& p, const ParamVector& at) {
  ResidualIndex idx;
  idx.at = to_string(at);
  for (int r : p.subsystem->root_indices) {
    Rational v = p.value(r).evaluate(at);
    if (v == p.subsystem->k(r).evaluate(at)) ++idx.matches;
    if (v == 0) ++idx.zeros;
  }
  return idx;
}

bool is_residual_at(const GenericResidualPoint& p, const ParamVector& at) {
  return residual_index(p, at).excess() >= p.parent().rank;
}

const std::vector<LinForm>& coweight_coordinates(const GenericResidualPoint& p) { return p.coords; }

GenericResidualPoint conjugate(const GenericResidualPoint& p, const WeylGroup& w, std::size_t element) {
  GenericResidualPoint q;
  q.subsystem = make_subsystem(p.subsystem->parent, w.act_on_coords(element, p.subsystem->kac_point));
  q.coords = w.act_on_coords(element, p.coords);
  q.xi = ambient_from_coords(p.parent(), q.coords);
  for (int r : p.defining_roots) q.defining_roots.push_back(w.act_on_root(element, r));
  return q;
}

std::optional<std::size_t> conjugating_element(const WeylGroup& w, const std::vector<LinForm>& a,
                                               const std::vector<LinForm>& b) {
  for (std::size_t e = 0; e < w.order(); ++e)
    if (w.act_on_coords(e, a) == b) return e;
  return std::nullopt;
}

}  // namespace hecke
