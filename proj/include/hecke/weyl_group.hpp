#pragma once

#include "hecke/linform.hpp"
#include "hecke/matrix.hpp"
#include "hecke/root_system.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace hecke {

/// Matrix in the simple-root coefficient basis of the parent system, acting
/// on column vectors, together with a word in the generating reflections.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;
};

bool is_elliptic(const IntMatrix& w);

/// det(1 - w); asserted to be a non-negative integer.
long long det_one_minus(const IntMatrix& w);

/// Reflection in root beta of the parent, in the coefficient basis.
IntMatrix reflection_matrix(const RootSystem& rs, int beta);

/// Finite group generated by reflections in the given roots of a parent system.
class WeylGroup {
 public:
  static constexpr std::size_t kMaxOrder = 50000;

  /// Generated by the simple reflections of rs.
  explicit WeylGroup(RootSystemPtr rs);
  /// Generated by the reflections in the given parent roots (e.g. subsystem simples).
  WeylGroup(RootSystemPtr rs, std::vector<int> generator_roots);

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<int>& generator_roots() const { return gens_; }
  std::uint64_t id() const { return id_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t generator(std::size_t g) const { return gen_index_[g]; }
  /// Index of the element with this matrix; throws when absent.
  std::size_t index_of(const IntMatrix& m) const;

  /// Image of parent root r under element i.
  int act_on_root(std::size_t i, int r) const { return perm_[i][r]; }
  const std::vector<int>& root_permutation(std::size_t i) const { return perm_[i]; }

  /// Values on the parent simple roots of w(xi), given those of xi.
  template <class T>
  std::vector<T> act_on_coords(std::size_t i, const std::vector<T>& a) const {
    const auto& inv = perm_[inverse_[i]];
    std::vector<T> out;
    out.reserve(a.size());
    for (int s = 0; s < rs_->rank; ++s) out.push_back(evaluate_root(inv[s], a));
    return out;
  }

 private:
  template <class T>
  T evaluate_root(int r, const std::vector<T>& a) const {
    T v(0);
    for (int j = 0; j < rs_->rank; ++j)
      if (rs_->coeffs[r][j] != 0) v += a[j] * Rational(rs_->coeffs[r][j]);
    return v;
  }

  void build();

  RootSystemPtr rs_;
  std::vector<int> gens_;
  std::uint64_t id_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<int>> perm_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> gen_index_;
  std::map<std::vector<long long>, std::size_t> lookup_;
};

struct ConjugacyClass {
  std::size_t representative = 0;  // smallest element index in the class
  std::vector<std::size_t> members;
  long long trace = 0;
  long long det_one_minus = 0;
  bool elliptic = false;
};

struct ClassPartition {
  std::uint64_t group_id = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;  // element index -> class id
};

/// Classes sorted by (size, trace of representative, representative index).
ClassPartition conjugacy_classes(const WeylGroup& g);

std::size_t elliptic_class_count(const ClassPartition& p);

/// Integer-valued class function attached to a specific group.
struct ClassFunction {
  std::uint64_t group_id = 0;
  std::vector<Integer> values;  // indexed by class id
};

ClassFunction trivial_character(const WeylGroup& g, const ClassPartition& p);
ClassFunction sign_character(const WeylGroup& g, const ClassPartition& p);
ClassFunction reflection_character(const WeylGroup& g, const ClassPartition& p);

/// |W|^-1 sum_w det(1 - w) f(w) g(w).
Rational elliptic_pairing(const ClassFunction& f, const ClassFunction& g, const WeylGroup& group,
                          const ClassPartition& p);

/// Ordinary inner product |W|^-1 sum_w f(w) g(w).
Rational inner_product(const ClassFunction& f, const ClassFunction& g, const WeylGroup& group, const ClassPartition& p);

}  // namespace hecke
