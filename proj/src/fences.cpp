#include "obranch/fences.hpp"

#include <algorithm>
#include <numeric>

namespace obranch {

std::vector<SignatureKey> MultiSignature::support() const {
  std::vector<SignatureKey> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.key);
  return out;
}

Rational key_value(const Weight& lambda, const Weight& nu, const SignatureKey& k) {
  return lambda(k.i) + Rational(k.delta) * nu(k.j);
}

std::vector<SignatureKey> signature_support(const Weight& lambda, const Weight& nu) {
  std::vector<SignatureKey> out;
  for (int i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < nu.size(); ++j)
      for (int d : {1, -1}) {
        SignatureKey k{i, j, d};
        if (key_value(lambda, nu, k).is_half_odd()) out.push_back(k);
      }
  return out;
}

MultiSignature multi_signature(const Weight& lambda, const Weight& nu) {
  MultiSignature s;
  for (const auto& k : signature_support(lambda, nu)) s.entries.push_back({k, key_value(lambda, nu, k).sign()});
  return s;
}

bool away_from_fences(const Weight& xi, const Weight& nu) {
  const Rational half(1, 2);
  for (const auto& k : signature_support(xi, nu)) {
    Rational v = key_value(xi, nu, k);
    if (v == half || v == -half) return false;
  }
  return true;
}

RegionDescriptor make_region(const Weight& xi, const Weight& nu) {
  return RegionDescriptor{xi, nu, multi_signature(xi, nu), away_from_fences(xi, nu)};
}

namespace {

void require_integral_shift(const Weight& xi, const Weight& lambda) {
  if (xi.size() != lambda.size()) throw LatticeError("weight length mismatch");
  for (Eigen::Index k = 0; k < xi.size(); ++k)
    if (!(lambda(k) - xi(k)).is_integer())
      throw LatticeError(format_weight(lambda) + " is not in " + format_weight(xi) + " + Z^r");
}

bool member(const RegionDescriptor& region, const std::vector<SignedRoot>& pos, const Weight& lambda) {
  if (!in_chamber(pos, lambda)) return false;
  for (const auto& e : region.signature.entries)
    if (key_value(lambda, region.nu, e.key).sign() != e.sign) return false;
  return true;
}

}  // namespace

bool same_region(const RegionDescriptor& region, const Weight& lambda) {
  require_integral_shift(region.base, lambda);
  if (!region.away_from_fences) throw PreconditionError("region base lies on a fence");
  return member(region, positive_system(region.base), lambda);
}

std::vector<Weight> lattice_path(const Weight& xi, const Weight& lambda, const Weight& nu) {
  RegionDescriptor region = make_region(xi, nu);
  if (!region.away_from_fences) throw PreconditionError("base " + format_weight(xi) + " lies on a fence");
  require_integral_shift(xi, lambda);
  auto pos = positive_system(xi);
  if (!member(region, pos, lambda))
    throw NoPathError(format_weight(lambda) + " is not in the region of " + format_weight(xi));

  std::vector<Weight> path{xi};
  Weight cur = xi;
  const Eigen::Index r = xi.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(r));
  while (!equal(cur, lambda)) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return (lambda(a) - cur(a)).abs() > (lambda(b) - cur(b)).abs();
    });
    bool moved = false;
    for (Eigen::Index k : order) {
      Rational gap = lambda(k) - cur(k);
      if (gap.is_zero()) break;
      Weight next = cur;
      next(k) += Rational(gap.sign());
      if (member(region, pos, next)) {
        cur = next;
        path.push_back(cur);
        moved = true;
        break;
      }
    }
    if (!moved) throw NoPathError("no monotone in-region step from " + format_weight(cur));
  }
  return path;
}

}  // namespace obranch
