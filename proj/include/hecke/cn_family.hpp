#pragma once

#include "hecke/linform.hpp"
#include "hecke/mass_function.hpp"
#include "hecke/matrix.hpp"
#include "hecke/weyl_group.hpp"

#include <string>
#include <vector>

namespace hecke {

struct Bipartition {
  std::vector<int> lambda;
  std::vector<int> mu;

  int size() const;
  int lambda_size() const;
  /// "2,1|1"; empty sides print as nothing.
  std::string to_string() const;
  static Bipartition parse(const std::string& text);
  friend bool operator==(const Bipartition& a, const Bipartition& b) { return a.lambda == b.lambda && a.mu == b.mu; }
};

/// Bipartitions of n, larger lambda first, each side in reverse lexicographic order.
std::vector<Bipartition> bipartitions(int n);

struct Box {
  int component = 0;  // 0 for lambda, 1 for mu
  int row = 1;        // x, growing downward
  int col = 1;        // y, growing rightward

  int content() const { return col - row; }
  friend bool operator==(const Box& a, const Box& b) {
    return a.component == b.component && a.row == b.row && a.col == b.col;
  }
};

/// Standard filling: entries increase along rows and down columns of each side.
struct Bitableau {
  std::vector<Box> position;  // position[k - 1] holds entry k

  int size() const { return static_cast<int>(position.size()); }
  const Box& box(int k) const;
  std::string to_string() const;
};

std::vector<Bitableau> standard_bitableaux(const Bipartition& bp);

struct CnParams {
  Rational v0 = 1;
  Rational v1 = 1;
  Rational v2 = 1;

  static CnParams parse(const std::string& text);  // "v0,v1,v2"
  std::string to_string() const;
};

/// v1^(2(y - x)) v2 for lambda boxes, -v1^(2(y - x)) / v2 for mu boxes.
Rational content_value(const Bitableau& t, int k, const CnParams& p);

struct CnModule {
  Bipartition bp;
  CnParams params;
  std::vector<Bitableau> basis;
  std::vector<RatMatrix> theta;  // theta_1 .. theta_n, diagonal
  std::vector<RatMatrix> gens;   // N_1 .. N_n

  std::size_t dimension() const { return basis.size(); }
};

/// Exact matrices; every defining relation is verified before returning.
CnModule build_module(const Bipartition& bp, const CnParams& params);

/// Violated relations, empty when all hold exactly.
std::vector<std::string> relation_failures(const CnModule& m);

/// Every product theta_1 ... theta_j has eigenvalues of absolute value below 1.
bool is_discrete_series(const CnModule& m);

struct CentralCharacterEntry {
  int sign = 1;       // -1 over lambda, +1 over mu
  LinForm exponent;   // r_i = sign * v^exponent
  LinForm graded;     // cbar_i
};

/// Symbols m_plus and m_minus.
std::vector<CentralCharacterEntry> central_character_string(const Bipartition& bp);

/// prod' over B_l of alpha(c) / (prod' over D_l of (alpha(c) - 1) * prod' over A_1^l of (alpha(c) - m)).
GradedSign epsilon_expression(const std::vector<LinForm>& cbar, const LinForm& m);

/// epsilon(lambda, m_minus) * epsilon(mu, -m_plus) read off the expression above.
int epsilon_displayed_C(const Bipartition& bp, const Rational& m_plus, const Rational& m_minus);

/// Sign of the graded limit of the formal degree product, so that fdeg_C is positive.
/// Equals epsilon_displayed_C * (-1)^(|lambda| + d(lambda) + d(mu)), d = diagonal length.
int epsilon_sign_C(const Bipartition& bp, const Rational& m_plus, const Rational& m_minus);

int diagonal_length(const std::vector<int>& parts);

/// unit * v^E - 1 becomes E for unit 1 and -1 otherwise; a negative scalar adds -1.
GradedSign graded_limit(const MassFunction& m);

/// Rational function of the formal degree for a central character string (up to
/// the sign epsilon), with factors over R0 as a mass function in v.
MassFunction fdeg_function(const std::vector<CentralCharacterEntry>& string);

/// d_b * epsilon * (assembled product), d_b = 1.
RegularizedValue fdeg_C(const Bipartition& bp, const Rational& m_plus, const Rational& m_minus, const Rational& v);

struct WeylRestriction {
  ClassFunction character;
  std::vector<int> compact_part;  // |lambda| entries -1, then |mu| entries +1
  std::size_t dimension = 0;
  std::vector<RatMatrix> generators;  // images of s_1 .. s_n
};

/// The module at v0 = v1 = v2 = 1 as a representation of W0(C_n); the group must
/// be the Weyl group of the Cn-datum of rank n.
WeylRestriction restrict_to_weyl(const Bipartition& bp, const WeylGroup& group, const ClassPartition& classes);

}  // namespace hecke
