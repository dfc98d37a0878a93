// Branching O(n+1) -> O(n) for finite-dimensional representations: oracle, interlacing, reduced families, stability.
#pragma once

#include <map>
#include <vector>

#include "obranch/fences.hpp"
#include "obranch/labels.hpp"

namespace obranch {

/// Full decomposition of Pi restricted to O(N-1), by characters.
std::map<FDLabel, int> oracle_branching(const FDLabel& Pi);
int oracle_multiplicity(const FDLabel& Pi, const FDLabel& pi);

/// Closed-form 0/1 prediction.
int interlace_predicate(const FDLabel& Pi, const FDLabel& pi);

/// Base point of the reduced family: rho for O(2r+1), rho + (1,...,1) for O(2r).
Weight family_base(const RankContext& ctx);
/// Labels of the reduced family with |lambda - base|_1 <= bound, ordered by lambda.
std::vector<FDLabel> reduced_family(const RankContext& ctx, int eps, int bound);
/// The O(n+1) label with infinitesimal character lambda in the family of sign eps.
FDLabel label_of(const RankContext& ctx, const Weight& lambda, int eps);

struct FenceCrossing {
  Weight from, to;
  int change = 0;
};

struct StabilityReport {
  RegionDescriptor region;
  std::vector<std::pair<Weight, int>> samples;
  bool constant = true;
  std::vector<FenceCrossing> fence_crossings;
};

/// Oracle multiplicities over the region of xi with |lambda - xi|_1 <= bound, plus exits to lattice neighbours.
StabilityReport stability_scan(const RankContext& ctx, const Weight& xi, const FDLabel& pi, int bound, int eps = 1);

}  // namespace obranch
