#include "hecke/root_system.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace hecke {

namespace {

struct Realization {
  RatMatrix gram;
  std::vector<RatVector> simple;
};

RatVector unit(int dim, int i, const Rational& scale = 1) {
  RatVector v(dim, Rational(0));
  v[i] = scale;
  return v;
}

RatVector diff(int dim, int i, int j) {
  RatVector v(dim, Rational(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

Realization realize(const std::string& tag, int n) {
  Realization r;
  if (tag == "G2") {
    r.gram = RatMatrix(2, 2);
    r.gram(0, 0) = 6;
    r.gram(0, 1) = -3;
    r.gram(1, 0) = -3;
    r.gram(1, 1) = 2;
    r.simple = {unit(2, 0), unit(2, 1)};
  } else if (tag == "F4") {
    r.gram = RatMatrix::identity(4);
    Rational h(1, 2);
    r.simple = {diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), RatVector{h, -h, -h, -h}};
  } else if (tag == "An") {
    r.gram = RatMatrix::identity(n + 1);
    for (int i = 0; i < n; ++i) r.simple.push_back(diff(n + 1, i, i + 1));
  } else if (tag == "Bn" || tag == "Cn-datum") {
    r.gram = RatMatrix::identity(n);
    for (int i = 0; i + 1 < n; ++i) r.simple.push_back(diff(n, i, i + 1));
    r.simple.push_back(unit(n, n - 1));
  } else if (tag == "Dn") {
    r.gram = RatMatrix::identity(n);
    for (int i = 0; i + 1 < n; ++i) r.simple.push_back(diff(n, i, i + 1));
    RatVector last(n, Rational(0));
    last[n - 2] = 1;
    last[n - 1] = 1;
    r.simple.push_back(last);
  }
  return r;
}

int min_rank(const std::string& tag) {
  if (tag == "G2") return 2;
  if (tag == "F4") return 4;
  if (tag == "Bn") return 2;
  if (tag == "Dn") return 4;
  return 1;
}

int fixed_rank(const std::string& tag) {
  if (tag == "G2") return 2;
  if (tag == "F4") return 4;
  return 0;
}

bool coeffs_positive(const Coeffs& c) {
  bool any = false;
  for (int x : c) {
    if (x < 0) return false;
    if (x > 0) any = true;
  }
  return any;
}

int sum_of(const Coeffs& c) { return std::accumulate(c.begin(), c.end(), 0); }

}  // namespace

std::string canonical_type_tag(const std::string& text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (t == "G2") return "G2";
  if (t == "F4") return "F4";
  if (t == "CN-DATUM" || t == "CN" || t == "C") return "Cn-datum";
  if (t == "AN" || t == "A") return "An";
  if (t == "BN" || t == "B") return "Bn";
  if (t == "DN" || t == "D") return "Dn";
  throw UsageError("unknown root system type '" + text + "'");
}

int RootSystem::height(int i) const { return sum_of(coeffs[i]); }

int RootSystem::find(const Coeffs& c) const {
  auto it = index.find(c);
  return it == index.end() ? -1 : it->second;
}

Rational RootSystem::inner(const RatVector& a, const RatVector& b) const {
  Rational s = 0;
  for (int i = 0; i < ambient_dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < ambient_dim; ++j)
      if (b[j] != 0) s += a[i] * gram(i, j) * b[j];
  }
  return s;
}

int RootSystem::pairing(int i, int j) const {
  Rational p = 2 * inner(roots[i], roots[j]) / norm2[j];
  if (!is_integer(p)) throw InternalError("non-integral root pairing");
  return static_cast<int>(numerator(p).convert_to<long>());
}

LinForm RootSystem::value(int i, const std::vector<LinForm>& a) const {
  LinForm f;
  for (int j = 0; j < rank; ++j)
    if (coeffs[i][j] != 0) f += a[j] * Rational(coeffs[i][j]);
  return f;
}

Rational RootSystem::value(int i, const RatVector& a) const {
  Rational s = 0;
  for (int j = 0; j < rank; ++j) s += a[j] * coeffs[i][j];
  return s;
}

int RootSystem::reflect(int i, int j) const {
  int p = pairing(i, j);
  Coeffs c = coeffs[i];
  for (int t = 0; t < rank; ++t) c[t] -= p * coeffs[j][t];
  int r = find(c);
  if (r < 0) throw InternalError("root set not closed under reflection");
  return r;
}

std::vector<std::string> RootSystem::parameter_symbols() const {
  std::set<std::string> s(param_label.begin(), param_label.end());
  return {s.begin(), s.end()};
}

RootSystemPtr build_root_system(const std::string& type_text, int rank) {
  const std::string tag = canonical_type_tag(type_text);
  if (int fr = fixed_rank(tag); fr != 0 && rank != fr)
    throw UsageError(tag + " has rank " + std::to_string(fr));
  if (rank < min_rank(tag) || rank > 8)
    throw UsageError("rank " + std::to_string(rank) + " out of range for " + tag);

  Realization real = realize(tag, rank);
  auto rs = std::make_shared<RootSystem>();
  rs->type_tag = tag;
  rs->rank = rank;
  rs->ambient_dim = static_cast<int>(real.gram.rows());
  rs->gram = real.gram;

  auto ip = [&](const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (int i = 0; i < rs->ambient_dim; ++i)
      for (int j = 0; j < rs->ambient_dim; ++j) s += a[i] * real.gram(i, j) * b[j];
    return s;
  };
  rs->cartan = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational p = 2 * ip(real.simple[i], real.simple[j]) / ip(real.simple[j], real.simple[j]);
      rs->cartan(i, j) = numerator(p).convert_to<long long>();
    }

  std::set<Coeffs> seen;
  std::deque<Coeffs> queue;
  for (int i = 0; i < rank; ++i) {
    Coeffs c(rank, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    Coeffs c = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      long long p = 0;
      for (int i = 0; i < rank; ++i) p += c[i] * rs->cartan(i, j);
      Coeffs d = c;
      d[j] -= static_cast<int>(p);
      if (coeffs_positive(d) && seen.insert(d).second) queue.push_back(d);
    }
  }
  std::vector<Coeffs> pos(seen.begin(), seen.end());
  std::sort(pos.begin(), pos.end(), [](const Coeffs& a, const Coeffs& b) {
    int ha = sum_of(a), hb = sum_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const auto& c : pos) rs->coeffs.push_back(c);
  for (const auto& c : pos) {
    Coeffs m = c;
    for (int& x : m) x = -x;
    rs->coeffs.push_back(m);
  }

  Rational max_norm = 0;
  for (std::size_t r = 0; r < rs->coeffs.size(); ++r) {
    RatVector v(rs->ambient_dim, Rational(0));
    for (int i = 0; i < rank; ++i)
      if (rs->coeffs[r][i] != 0)
        for (int d = 0; d < rs->ambient_dim; ++d) v[d] += rs->coeffs[r][i] * real.simple[i][d];
    rs->norm2.push_back(ip(v, v));
    if (rs->norm2.back() > max_norm) max_norm = rs->norm2.back();
    rs->roots.push_back(std::move(v));
    rs->index[rs->coeffs[r]] = static_cast<int>(r);
  }
  bool laced = std::all_of(rs->norm2.begin(), rs->norm2.end(), [&](const Rational& x) { return x == max_norm; });
  for (std::size_t r = 0; r < rs->roots.size(); ++r) {
    bool is_long = rs->norm2[r] == max_norm;
    rs->length_class.push_back(is_long ? "long" : "short");
    rs->param_label.push_back(laced ? "k" : (is_long ? "k1" : "k2"));
  }
  for (int i = 0; i < rank; ++i) rs->simple.push_back(i);
  return rs;
}

std::vector<RatVector> fundamental_coweights(const RootSystem& rs) {
  const int n = rs.rank;
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rs.inner(rs.roots[i], rs.roots[j]);
  auto inv = inverse(m);
  if (!inv) throw InternalError("singular Cartan matrix");
  std::vector<RatVector> out;
  for (int i = 0; i < n; ++i) {
    RatVector w(rs.ambient_dim, Rational(0));
    for (int j = 0; j < n; ++j)
      for (int d = 0; d < rs.ambient_dim; ++d) w[d] += (*inv)(j, i) * rs.roots[j][d];
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t rank_of_roots(const RootSystem& rs, const std::vector<int>& roots) {
  RatMatrix m(roots.size(), rs.rank);
  for (std::size_t r = 0; r < roots.size(); ++r)
    for (int i = 0; i < rs.rank; ++i) m(r, i) = rs.coeffs[roots[r]][i];
  return rank_of(m);
}

std::vector<int> subsystem_simple_roots(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<int> pos;
  for (int r : roots)
    if (rs.is_positive(r)) pos.push_back(r);
  std::set<int> decomposable;
  std::set<int> members(pos.begin(), pos.end());
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      Coeffs c = rs.coeffs[pos[a]];
      for (int i = 0; i < rs.rank; ++i) c[i] += rs.coeffs[pos[b]][i];
      int r = rs.find(c);
      if (r >= 0 && members.count(r)) decomposable.insert(r);
    }
  std::vector<int> simple;
  for (int r : pos)
    if (!decomposable.count(r)) simple.push_back(r);
  return simple;
}

std::string identify_type(const RootSystem& rs, const std::vector<int>& simple) {
  const int n = static_cast<int>(simple.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b)
        if (comp[b] < 0 && rs.pairing(simple[a], simple[b]) != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  std::vector<std::pair<int, std::string>> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int s = 0; s < n; ++s)
      if (comp[s] == c) nodes.push_back(simple[s]);
    const int r = static_cast<int>(nodes.size());
    int max_bond = 0;
    std::vector<int> degree(r, 0);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        if (a == b) continue;
        int bond = rs.pairing(nodes[a], nodes[b]) * rs.pairing(nodes[b], nodes[a]);
        if (bond) ++degree[a];
        max_bond = std::max(max_bond, bond);
      }
    std::string name;
    if (r == 1) {
      name = "A1";
    } else if (max_bond == 3) {
      name = "G2";
    } else if (max_bond == 2) {
      Rational longest = 0;
      for (int x : nodes) longest = std::max(longest, rs.norm2[x]);
      int shorts = 0;
      for (int x : nodes)
        if (rs.norm2[x] != longest) ++shorts;
      if (r == 4 && shorts == 2) {
        name = "F4";
      } else {
        name = (shorts == 1 ? "B" : "C") + std::to_string(r);
      }
    } else {
      int branch = -1;
      for (int a = 0; a < r; ++a)
        if (degree[a] == 3) branch = a;
      if (branch < 0) {
        name = "A" + std::to_string(r);
      } else {
        std::vector<int> arms;
        for (int b = 0; b < r; ++b) {
          if (b == branch || rs.pairing(nodes[branch], nodes[b]) == 0) continue;
          int len = 1, prev = branch, cur = b;
          for (bool more = true; more;) {
            more = false;
            for (int x = 0; x < r; ++x)
              if (x != prev && x != cur && rs.pairing(nodes[cur], nodes[x]) != 0) {
                prev = cur;
                cur = x;
                ++len;
                more = true;
                break;
              }
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        name = (arms[1] == 1 ? "D" : "E") + std::to_string(r);
      }
    }
    parts.emplace_back(r, name);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::string tag;
  for (const auto& [_, name] : parts) tag += (tag.empty() ? "" : "+") + name;
  return tag;
}

bool Subsystem::contains(int i) const { return std::binary_search(root_indices.begin(), root_indices.end(), i); }

SubsystemPtr make_subsystem(RootSystemPtr parent, const RatVector& kac_point) {
  auto sub = std::make_shared<Subsystem>();
  sub->parent = parent;
  sub->kac_point = kac_point;
  std::vector<Rational> vals(kac_point.begin(), kac_point.end());
  sub->kac_denominator = static_cast<int>(common_denominator(vals).convert_to<long>());
  for (int r = 0; r < parent->size(); ++r)
    if (is_integer(parent->value(r, kac_point))) {
      sub->root_indices.push_back(r);
      if (parent->is_positive(r)) sub->positive.push_back(r);
      sub->induced_k.emplace(r, parent->k(r));
    }
  if (rank_of_roots(*parent, sub->root_indices) != static_cast<std::size_t>(parent->rank))
    throw PreconditionError("kac point does not define a full-rank subsystem");
  sub->simple = subsystem_simple_roots(*parent, sub->root_indices);
  sub->type_tag = identify_type(*parent, sub->simple);
  return sub;
}

SubsystemPtr full_subsystem(RootSystemPtr parent) {
  return make_subsystem(parent, RatVector(parent->rank, Rational(0)));
}

std::string subsystem_tag_from_table(const std::string& s_cell, const RootSystem& parent) {
  if (s_cell == "1") return parent.type_tag;
  std::vector<std::pair<int, std::string>> parts;
  std::size_t i = 0;
  while (i < s_cell.size()) {
    int mult = 1;
    if (std::isdigit(static_cast<unsigned char>(s_cell[i]))) {
      mult = s_cell[i] - '0';
      ++i;
    }
    if (i + 1 >= s_cell.size()) throw UsageError("bad subsystem cell '" + s_cell + "'");
    char letter = s_cell[i];
    if (s_cell[i + 1] != '_') throw UsageError("bad subsystem cell '" + s_cell + "'");
    std::string idx;
    i += 2;
    while (i < s_cell.size() && std::isdigit(static_cast<unsigned char>(s_cell[i]))) idx.push_back(s_cell[i++]);
    for (int m = 0; m < mult; ++m) parts.emplace_back(std::stoi(idx), std::string(1, letter) + idx);
  }
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::string tag;
  for (const auto& [_, name] : parts) tag += (tag.empty() ? "" : "+") + name;
  return tag;
}

}  // namespace hecke
