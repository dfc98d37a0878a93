// Weight multiplicities of SO(N) by Freudenthal's recursion, Weyl dimensions and highest-weight peeling.
#pragma once

#include <map>
#include <vector>

#include "obranch/labels.hpp"

namespace obranch {

using IntWeight = std::vector<int>;
/// Full weight multiplicity table.
using Character = std::map<IntWeight, long>;

/// Weyl dimension of F^{SO(N)}(mu); mu_r may be negative when N is even.
long so_dimension(int N, const IntWeight& mu);
/// Dimension of the O(N) irreducible.
long o_dimension(const FDLabel& label);

/// Dominant weight multiplicities from Freudenthal's formula.
std::map<IntWeight, long> dominant_multiplicities(int N, const IntWeight& mu);
/// All weights with multiplicities. Cached and thread safe.
const Character& so_character(int N, const IntWeight& mu);

/// Drops the last coordinate when N is even; the identity on coordinates when N is odd.
Character restrict_character(int N, const Character& ch);
/// Decomposes a character of SO(N) by repeatedly removing the lexicographically largest weight.
std::map<IntWeight, long> peel(int N, Character ch);
/// Highest weights of SO(N-1) in F^{SO(N)}(mu).
std::map<IntWeight, long> so_branching(int N, const IntWeight& mu);

}  // namespace obranch
