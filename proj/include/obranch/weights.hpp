// Weights of O(n+1) and O(n), the root set Delta_G, positive systems and the lattice Lambda(xi).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "obranch/rational.hpp"

namespace obranch {

using Weight = VecQ;

struct SingularWeightError : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidRankError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The pair G = O(n+1) over G' = O(n).
struct RankContext {
  int n = 2;
  int r = 1;  ///< rank of G
  int s = 1;  ///< rank of G'
  bool n_even() const { return n % 2 == 0; }
  bool n_odd() const { return n % 2 != 0; }
};

RankContext rank_context(int n);

/// Builds a weight from a brace list of rationals or integers.
Weight make_weight(std::initializer_list<Rational> coords);
Weight parse_weight(const std::string& csv);
std::string format_weight(const Weight& w);
bool lex_less(const Weight& a, const Weight& b);
bool equal(const Weight& a, const Weight& b);

Weight rho(const RankContext& ctx);
/// rho of the subgroup O(n): coordinates n/2 - j.
Weight rho_sub(const RankContext& ctx);

bool is_nonsingular(const Weight& lambda);

struct Norms {
  Rational l1;
  Rational l2_squared;
};
Norms norms(const Weight& lambda);
Rational norm2(const Weight& lambda);

/// a * e_i + b * e_j (long) or a * e_i (short). Indices are 0-based, i < j for long roots.
struct SignedRoot {
  enum class Kind { Long, Short };
  Kind kind = Kind::Short;
  int i = 0;
  int j = -1;
  int si = 1;
  int sj = 1;

  /// <alpha^vee, xi> used for the integrality test.
  Rational integrality_pairing(const Weight& xi) const;
  /// <eta, alpha> used for chamber positivity.
  Rational chamber_pairing(const Weight& eta) const;
  std::string str() const;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// All of Delta_G in canonical order: long roots first, then short.
std::vector<SignedRoot> root_set(int rank);

std::vector<SignedRoot> positive_system(const Weight& xi);
bool in_chamber(const Weight& xi, const Weight& eta);
bool in_chamber(const std::vector<SignedRoot>& positive, const Weight& eta);

/// Lattice points of (xi + Z^r) inside the open chamber of xi with |lambda - xi|_1 <= bound.
std::vector<Weight> lattice_box(const Weight& xi, const Rational& bound);

/// Applies the signed permutation w: (w x)_k = signs[k] * x[perm[k]].
Weight apply_signed_permutation(const Weight& x, const std::vector<int>& perm, const std::vector<int>& signs);

}  // namespace obranch
