#include "obranch/branching.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

#include "obranch/characters.hpp"

namespace obranch {

namespace {

std::map<FDLabel, int> compute_branching(const FDLabel& Pi) {
  const int N = Pi.N, Np = N - 1;
  std::vector<IntWeight> parts{Pi.mu};
  if (N % 2 == 0 && Pi.mu.back() >= 1) {
    IntWeight bar = Pi.mu;
    bar.back() = -bar.back();
    parts.push_back(bar);
  }
  std::map<IntWeight, long> so;
  for (const auto& w : parts)
    for (const auto& [t, m] : so_branching(N, w)) so[t] += m;

  std::map<FDLabel, int> out;
  for (const auto& [t, m] : so) {
    if (Np % 2 == 0) {
      const int last = t.back();
      if (last < 0) {
        IntWeight flip = t;
        flip.back() = -last;
        auto it = so.find(flip);
        if (it == so.end() || it->second != m) throw std::logic_error("restriction is not stable under the reflection");
        continue;
      }
      if (last > 0) out[make_label(Np, t, 0)] += static_cast<int>(m);
      else out[make_label(Np, t, Pi.sign)] += static_cast<int>(m);
    } else if (Pi.mu.back() >= 1) {
      if (m % 2) throw std::logic_error("odd SO multiplicity for a det-invariant representation");
      out[make_label(Np, t, 1)] += static_cast<int>(m / 2);
      out[make_label(Np, t, -1)] += static_cast<int>(m / 2);
    } else {
      out[make_label(Np, t, Pi.sign)] += static_cast<int>(m);
    }
  }
  return out;
}

}  // namespace

std::map<FDLabel, int> oracle_branching(const FDLabel& Pi) {
  validate(Pi);
  static std::shared_mutex mtx;
  static std::map<FDLabel, std::map<FDLabel, int>> cache;
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(Pi);
    if (it != cache.end()) return it->second;
  }
  auto res = compute_branching(Pi);
  std::unique_lock lock(mtx);
  cache.emplace(Pi, res);
  return res;
}

int oracle_multiplicity(const FDLabel& Pi, const FDLabel& pi) {
  validate(pi);
  if (pi.N != Pi.N - 1) throw std::invalid_argument("subgroup label must be for O(N-1)");
  const auto b = oracle_branching(Pi);
  auto it = b.find(pi);
  return it == b.end() ? 0 : it->second;
}

int interlace_predicate(const FDLabel& Pi, const FDLabel& pi) {
  validate(Pi);
  validate(pi);
  if (pi.N != Pi.N - 1) throw std::invalid_argument("subgroup label must be for O(N-1)");
  const auto& a = Pi.mu;
  const auto& b = pi.mu;
  const std::size_t r = a.size(), s = b.size();
  for (std::size_t k = 0; k < s; ++k) {
    if (b[k] > a[k]) return 0;
    if (k + 1 < r && b[k] < a[k + 1]) return 0;
  }
  const bool free_sign = (Pi.N % 2) ? b.back() >= 1 : a.back() >= 1;
  if (!free_sign && pi.sign != Pi.sign) return 0;
  return 1;
}

Weight family_base(const RankContext& ctx) {
  Weight b = rho(ctx);
  if (ctx.n_odd())
    for (int k = 0; k < ctx.r; ++k) b(k) += Rational(1);
  return b;
}

FDLabel label_of(const RankContext& ctx, const Weight& lambda, int eps) {
  const Weight mu = lambda - rho(ctx);
  std::vector<int> m;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (!mu(k).is_integer()) throw LatticeError(format_weight(lambda) + " is not an integral infinitesimal character");
    m.push_back(static_cast<int>(mu(k).to_long()));
  }
  return make_label(ctx.n + 1, m, eps);
}

std::vector<FDLabel> reduced_family(const RankContext& ctx, int eps, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  std::vector<FDLabel> out;
  for (const Weight& l : lattice_box(family_base(ctx), Rational(bound))) out.push_back(label_of(ctx, l, eps));
  return out;
}

StabilityReport stability_scan(const RankContext& ctx, const Weight& xi, const FDLabel& pi, int bound, int eps) {
  if (pi.N != ctx.n) throw std::invalid_argument("pi must be a label of O(n)");
  const Weight nu = inf_char_of(pi);
  StabilityReport rep;
  rep.region = make_region(xi, nu);
  if (!rep.region.away_from_fences) throw PreconditionError("xi lies on a fence for this nu");
  const auto pos = positive_system(xi);
  auto mult = [&](const Weight& l) { return oracle_multiplicity(label_of(ctx, l, eps), pi); };
  std::vector<Weight> inside;
  for (const Weight& l : lattice_box(xi, Rational(bound)))
    if (same_region(rep.region, l)) {
      inside.push_back(l);
      rep.samples.emplace_back(l, mult(l));
    }
  for (const auto& [l, m] : rep.samples)
    if (m != rep.samples.front().second) rep.constant = false;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [l, m] : rep.samples)
    for (int k = 0; k < ctx.r; ++k)
      for (int s : {1, -1}) {
        Weight t = l;
        t(k) += Rational(s);
        if (!in_chamber(pos, t) || same_region(rep.region, t)) continue;
        if (!seen.insert({format_weight(l), format_weight(t)}).second) continue;
        rep.fence_crossings.push_back({l, t, mult(t) - m});
      }
  return rep;
}

}  // namespace obranch
