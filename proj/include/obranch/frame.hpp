// Index bookkeeping for o(N) acting on C^N with coordinates 0..n (full) or 1..n (subgroup).
//
// Matrices are stored in a twisted basis f'_k = i^{tau(k)} f_k, where X_ab = i^{tau(b)-tau(a)} Y_ab and every Y_ab is
// rational. Cartan pairs (a, b) have tau(a) = 0 and tau(b) = 1, so Y_ab is diagonalizable over Q with eigenvalues the
// weight coordinates.
#pragma once

#include <utility>
#include <vector>

#include "obranch/labels.hpp"
#include "obranch/ue.hpp"

namespace obranch {

struct Frame {
  int n = 2;         ///< ambient pair parameter
  bool sub = false;  ///< true: O(n) on 1..n, false: O(n+1) on 0..n
  int N = 3;         ///< size of the orthogonal group
  int lo = 0;
  int hi = 2;
  int rank = 1;
  std::vector<std::pair<int, int>> cartan;
  int spare = -1;               ///< index outside all Cartan pairs, or -1
  std::vector<Generator> gens;  ///< canonical order

  int tau(int a) const;
  /// Exponent e with X_ab = i^e Y_ab.
  int phase(int a, int b) const { return tau(b) - tau(a); }
  /// +1 when X^2 = -Y^2 (mixed classes), -1 when X^2 = Y^2.
  int sigma(const Generator& g) const { return tau(g.i) != tau(g.j) ? 1 : -1; }
  /// Position of X_ab (a < b) in gens, or -1.
  int gen_index(int a, int b) const;
  bool contains(int a) const { return a >= lo && a <= hi; }
  GroupTag tag() const { return N % 2 ? GroupTag::OOdd : GroupTag::OEven; }
  friend bool operator==(const Frame& a, const Frame& b) { return a.n == b.n && a.sub == b.sub; }

 private:
  std::vector<int> index_;
  friend Frame make_frame(int n, bool sub);
};

Frame make_frame(int n, bool sub);
inline Frame frame_G(int n) { return make_frame(n, false); }
inline Frame frame_sub(int n) { return make_frame(n, true); }

}  // namespace obranch
