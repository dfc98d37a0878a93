// Multi-signatures, fences and interleaving regions for a pair of weights (lambda, nu).
#pragma once

#include <stdexcept>
#include <vector>

#include "obranch/weights.hpp"

namespace obranch {

struct LatticeError : std::domain_error {
  using std::domain_error::domain_error;
};
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoPathError : std::domain_error {
  using std::domain_error::domain_error;
};

/// (i, j, delta) with 0-based indices; delta = +1 or -1.
struct SignatureKey {
  int i = 0;
  int j = 0;
  int delta = 1;
  friend bool operator==(const SignatureKey&, const SignatureKey&) = default;
  /// Order: i, then j, then '+' before '-'.
  friend bool operator<(const SignatureKey& a, const SignatureKey& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.delta > b.delta;
  }
};

struct SignatureEntry {
  SignatureKey key;
  int sign = 1;
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

/// Sorted key/sign pairs; the support is the key column.
struct MultiSignature {
  std::vector<SignatureEntry> entries;
  std::vector<SignatureKey> support() const;
  friend bool operator==(const MultiSignature&, const MultiSignature&) = default;
};

struct RegionDescriptor {
  Weight base;
  Weight nu;
  MultiSignature signature;
  bool away_from_fences = false;
};

Rational key_value(const Weight& lambda, const Weight& nu, const SignatureKey& k);

std::vector<SignatureKey> signature_support(const Weight& lambda, const Weight& nu);
MultiSignature multi_signature(const Weight& lambda, const Weight& nu);
bool away_from_fences(const Weight& xi, const Weight& nu);
RegionDescriptor make_region(const Weight& xi, const Weight& nu);

bool same_region(const RegionDescriptor& region, const Weight& lambda);

/// Monotone path xi -> lambda through the region with unit steps; greedy on the largest remaining gap.
std::vector<Weight> lattice_path(const Weight& xi, const Weight& lambda, const Weight& nu);

}  // namespace obranch
