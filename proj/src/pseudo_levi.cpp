#include "hecke/errors.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weyl_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hecke {

namespace {

constexpr int kMaxKacDenominator = 6;

std::vector<int> conjugacy_key(const WeylGroup& w, const std::vector<int>& roots) {
  std::vector<int> best;
  for (std::size_t e = 0; e < w.order(); ++e) {
    std::vector<int> img;
    img.reserve(roots.size());
    for (int r : roots) img.push_back(w.act_on_root(e, r));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

}  // namespace

std::vector<SubsystemPtr> pseudo_levi_subsystems(RootSystemPtr rs) {
  if (rs->type_tag != "G2" && rs->type_tag != "F4")
    throw PreconditionError("pseudo-Levi enumeration supports G2 and F4 only");
  const int n = rs->rank;
  WeylGroup w(rs);

  struct Best {
    int denominator;
    std::vector<int> numerators;
  };
  std::map<std::vector<int>, std::vector<int>> key_cache;
  std::map<std::vector<int>, Best> best;

  for (int N = 1; N <= kMaxKacDenominator; ++N) {
    std::vector<int> a(n, 0);
    while (true) {
      int g = N;
      for (int x : a) g = std::gcd(g, x);
      if (g == 1) {
        std::vector<int> integral;
        for (int r = 0; r < rs->size(); ++r) {
          long s = 0;
          for (int i = 0; i < n; ++i) s += static_cast<long>(rs->coeffs[r][i]) * a[i];
          if (s % N == 0) integral.push_back(r);
        }
        if (rank_of_roots(*rs, integral) == static_cast<std::size_t>(n)) {
          auto it = key_cache.find(integral);
          if (it == key_cache.end()) it = key_cache.emplace(integral, conjugacy_key(w, integral)).first;
          auto& slot = best[it->second];
          if (slot.numerators.empty()) slot = {N, a};
        }
      }
      int pos = n - 1;
      while (pos >= 0 && a[pos] == N - 1) a[pos--] = 0;
      if (pos < 0) break;
      ++a[pos];
    }
  }

  std::vector<SubsystemPtr> out;
  for (const auto& [_, b] : best) {
    RatVector kac;
    for (int x : b.numerators) kac.emplace_back(x, b.denominator);
    out.push_back(make_subsystem(rs, kac));
  }
  std::sort(out.begin(), out.end(), [](const SubsystemPtr& x, const SubsystemPtr& y) {
    if (x->type_tag != y->type_tag) return x->type_tag < y->type_tag;
    return x->root_indices < y->root_indices;
  });
  return out;
}

}  // namespace hecke
