// SVG slice through (lambda_i, lambda_i') space showing fences, region colours and the lattice xi + Z^r.
#pragma once

#include <string>

#include "obranch/weights.hpp"

namespace obranch {

struct SliceRange {
  Rational lo, hi;
};

/// Axes are 1-based. Throws std::invalid_argument on equal or out-of-range axes and on an empty range.
std::string render_region_slice(int n, const Weight& xi, const Weight& nu, int axis1, int axis2, const SliceRange& range);

/// Fence lines of the slice as (axis, value) pairs, in drawing order.
std::vector<std::pair<int, Rational>> slice_fences(int n, const Weight& xi, const Weight& nu, int axis1, int axis2,
                                                   const SliceRange& range);

}  // namespace obranch
