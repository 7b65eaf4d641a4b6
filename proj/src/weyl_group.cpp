#include "hecke/weyl_group.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <atomic>
#include <deque>

namespace hecke {

namespace {

std::atomic<std::uint64_t> next_group_id{1};

std::vector<long long> key_of(const IntMatrix& m) { return m.data(); }

void require_same_group(const ClassFunction& f, const ClassFunction& g, const WeylGroup& group) {
  if (f.group_id != group.id() || g.group_id != group.id())
    throw PreconditionError("class functions are attached to a different group");
}

}  // namespace

long long det_one_minus(const IntMatrix& w) {
  RatMatrix m = to_rational(IntMatrix::identity(w.rows())) - to_rational(w);
  Rational d = determinant(m);
  if (!is_integer(d) || d < 0) throw InternalError("det(1 - w) is not a non-negative integer");
  return numerator(d).convert_to<long long>();
}

bool is_elliptic(const IntMatrix& w) { return det_one_minus(w) != 0; }

IntMatrix reflection_matrix(const RootSystem& rs, int beta) {
  const int n = rs.rank;
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) {
    int p = rs.pairing(j, beta);
    for (int i = 0; i < n; ++i) m(i, j) -= rs.coeffs[beta][i] * p;
  }
  return m;
}

WeylGroup::WeylGroup(RootSystemPtr rs) : WeylGroup(rs, rs->simple) {}

WeylGroup::WeylGroup(RootSystemPtr rs, std::vector<int> generator_roots)
    : rs_(std::move(rs)), gens_(std::move(generator_roots)), id_(next_group_id++) {
  build();
}

void WeylGroup::build() {
  const int n = rs_->rank;
  std::vector<IntMatrix> refl;
  for (int r : gens_) refl.push_back(reflection_matrix(*rs_, r));

  elements_.push_back({IntMatrix::identity(n), {}});
  lookup_[key_of(elements_[0].matrix)] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < refl.size(); ++g) {
      IntMatrix next = elements_[cur].matrix * refl[g];
      auto key = key_of(next);
      if (lookup_.count(key)) continue;
      if (elements_.size() >= kMaxOrder) throw PreconditionError("Weyl group order exceeds the enumeration bound");
      std::vector<int> word = elements_[cur].word;
      word.push_back(static_cast<int>(g));
      lookup_[key] = elements_.size();
      queue.push_back(elements_.size());
      elements_.push_back({std::move(next), std::move(word)});
    }
  }

  perm_.resize(elements_.size());
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const IntMatrix& m = elements_[e].matrix;
    perm_[e].resize(rs_->size());
    for (int r = 0; r < rs_->size(); ++r) {
      Coeffs c(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i] += static_cast<int>(m(i, j)) * rs_->coeffs[r][j];
      int img = rs_->find(c);
      if (img < 0) throw InternalError("Weyl element does not permute the roots");
      perm_[e][r] = img;
    }
  }

  inverse_.resize(elements_.size());
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    // the inverse of a word is its reverse
    IntMatrix m = IntMatrix::identity(n);
    const auto& w = elements_[e].word;
    for (auto it = w.rbegin(); it != w.rend(); ++it) m = m * refl[*it];
    inverse_[e] = index_of(m);
  }
  for (std::size_t g = 0; g < refl.size(); ++g) gen_index_.push_back(index_of(refl[g]));
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements_[a].matrix * elements_[b].matrix);
}

std::size_t WeylGroup::index_of(const IntMatrix& m) const {
  auto it = lookup_.find(key_of(m));
  if (it == lookup_.end()) throw InternalError("matrix is not an element of the group");
  return it->second;
}

ClassPartition conjugacy_classes(const WeylGroup& g) {
  const std::size_t order = g.order();
  std::vector<long> raw(order, -1);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < order; ++e) {
    if (raw[e] >= 0) continue;
    long id = static_cast<long>(groups.size());
    groups.emplace_back();
    std::deque<std::size_t> queue{e};
    raw[e] = id;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      groups.back().push_back(x);
      for (std::size_t s = 0; s < g.generator_roots().size(); ++s) {
        std::size_t gs = g.generator(s);
        std::size_t y = g.multiply(g.multiply(gs, x), gs);
        if (raw[y] < 0) {
          raw[y] = id;
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<ConjugacyClass> classes;
  for (auto& members : groups) {
    std::sort(members.begin(), members.end());
    ConjugacyClass c;
    c.representative = members.front();
    c.members = members;
    const IntMatrix& m = g.element(c.representative).matrix;
    c.trace = m.trace();
    c.det_one_minus = det_one_minus(m);
    c.elliptic = c.det_one_minus != 0;
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    if (a.trace != b.trace) return a.trace < b.trace;
    return a.representative < b.representative;
  });
  ClassPartition p;
  p.group_id = g.id();
  p.class_of.resize(order);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t e : classes[c].members) p.class_of[e] = c;
  p.classes = std::move(classes);
  return p;
}

std::size_t elliptic_class_count(const ClassPartition& p) {
  return static_cast<std::size_t>(
      std::count_if(p.classes.begin(), p.classes.end(), [](const ConjugacyClass& c) { return c.elliptic; }));
}

ClassFunction trivial_character(const WeylGroup& g, const ClassPartition& p) {
  return {g.id(), std::vector<Integer>(p.classes.size(), Integer(1))};
}

ClassFunction sign_character(const WeylGroup& g, const ClassPartition& p) {
  ClassFunction f{g.id(), {}};
  for (const auto& c : p.classes) f.values.emplace_back(g.element(c.representative).word.size() % 2 ? -1 : 1);
  return f;
}

ClassFunction reflection_character(const WeylGroup& g, const ClassPartition& p) {
  ClassFunction f{g.id(), {}};
  for (const auto& c : p.classes) f.values.emplace_back(c.trace);
  return f;
}

Rational elliptic_pairing(const ClassFunction& f, const ClassFunction& h, const WeylGroup& group,
                          const ClassPartition& p) {
  require_same_group(f, h, group);
  Rational s = 0;
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    s += Rational(Integer(p.classes[c].members.size()) * p.classes[c].det_one_minus * f.values[c] * h.values[c]);
  return s / Rational(Integer(group.order()));
}

Rational inner_product(const ClassFunction& f, const ClassFunction& h, const WeylGroup& group,
                       const ClassPartition& p) {
  require_same_group(f, h, group);
  Rational s = 0;
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    s += Rational(Integer(p.classes[c].members.size()) * f.values[c] * h.values[c]);
  return s / Rational(Integer(group.order()));
}

}  // namespace hecke
