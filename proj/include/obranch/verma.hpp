// sl(2) Verma fusion: dim Hom(M(c), M(a) (x) M(b)) in closed form and by singular vectors.
#pragma once

#include "obranch/rational.hpp"

namespace obranch {

struct FusionQuery {
  Rational a, b, c;
};

/// 0 off the parity lattice, 2 on the integral jump region, 1 otherwise.
int fusion_multiplicity(const FusionQuery& q);

/// Kernel dimension of e acting from the weight-c space of M(a) (x) M(b) to weight c+2.
int fusion_oracle(const FusionQuery& q);

}  // namespace obranch
