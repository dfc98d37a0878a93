#include "obranch/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace obranch {

namespace {

struct Root {
  int i, j, si, sj;  // j < 0 for short roots
};

std::vector<Root> positive_roots(int N) {
  const int r = N / 2;
  std::vector<Root> out;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      out.push_back({i, j, 1, -1});
      out.push_back({i, j, 1, 1});
    }
  if (N % 2)
    for (int i = 0; i < r; ++i) out.push_back({i, -1, 1, 0});
  return out;
}

long pair(const IntWeight& w, const Root& a) {
  long v = static_cast<long>(a.si) * w[a.i];
  if (a.j >= 0) v += static_cast<long>(a.sj) * w[a.j];
  return v;
}

IntWeight rho2(int N) {
  IntWeight p(N / 2);
  for (int k = 0; k < N / 2; ++k) p[k] = N - 2 * (k + 1);
  return p;
}

long shifted_norm(const IntWeight& w, const IntWeight& p2) {
  long s = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    long v = 2L * w[k] + p2[k];
    s += v * v;
  }
  return s;
}

IntWeight dominant_conjugate(int N, IntWeight w) {
  bool odd_minus = false, has_zero = false;
  for (int& x : w) {
    if (x < 0) {
      odd_minus = !odd_minus;
      x = -x;
    }
    if (x == 0) has_zero = true;
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  if (N % 2 == 0 && odd_minus && !has_zero) w.back() = -w.back();
  return w;
}

bool is_dominant(int N, const IntWeight& w) {
  const int r = static_cast<int>(w.size());
  for (int k = 0; k + 1 < r; ++k)
    if (w[k] < w[k + 1]) return false;
  if (r == 0) return true;
  if (N % 2) return w.back() >= 0;
  if (r >= 2) return w[r - 2] >= std::abs(w[r - 1]);
  return true;
}

/// Height of mu - lambda in simple-root coordinates, or -1 when it is not a nonnegative integral combination.
long height(int N, const IntWeight& mu, const IntWeight& lambda) {
  const int r = static_cast<int>(mu.size());
  std::vector<long> s(r);
  long acc = 0;
  for (int k = 0; k < r; ++k) {
    acc += mu[k] - lambda[k];
    s[k] = acc;
  }
  long h = 0;
  if (N % 2) {
    for (int k = 0; k < r; ++k) {
      if (s[k] < 0) return -1;
      h += s[k];
    }
    return h;
  }
  if (r == 1) return mu[0] == lambda[0] ? 0 : -1;
  for (int k = 0; k + 2 < r; ++k) {
    if (s[k] < 0) return -1;
    h += s[k];
  }
  const long dr = mu[r - 1] - lambda[r - 1];
  const long a = s[r - 2] - dr, b = s[r - 1];
  if (a < 0 || b < 0 || a % 2 || b % 2) return -1;
  return h + a / 2 + b / 2;
}

void enumerate_dominant(int N, int k, int bound, IntWeight& cur, std::vector<IntWeight>& out) {
  const int r = static_cast<int>(cur.size());
  if (k == r) {
    if (is_dominant(N, cur)) out.push_back(cur);
    return;
  }
  const int lo = (N % 2 == 0 && k == r - 1) ? -bound : 0;
  const int hi = k ? cur[k - 1] : bound;
  for (int v = lo; v <= hi; ++v) {
    cur[k] = v;
    enumerate_dominant(N, k + 1, bound, cur, out);
  }
}

void orbit(int N, const IntWeight& dom, std::set<IntWeight>& out) {
  IntWeight base(dom.size());
  for (std::size_t k = 0; k < dom.size(); ++k) base[k] = std::abs(dom[k]);
  std::sort(base.begin(), base.end());
  const bool has_zero = std::find(base.begin(), base.end(), 0) != base.end();
  const int want = dom.empty() || dom.back() >= 0 ? 1 : -1;
  do {
    const int r = static_cast<int>(base.size());
    for (int mask = 0; mask < (1 << r); ++mask) {
      IntWeight w = base;
      int sgn = 1;
      bool skip = false;
      for (int k = 0; k < r; ++k)
        if (mask >> k & 1) {
          if (w[k] == 0) {
            skip = true;
            break;
          }
          w[k] = -w[k];
          sgn = -sgn;
        }
      if (skip) continue;
      if (N % 2 == 0 && !has_zero && sgn != want) continue;
      out.insert(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
}

void check_weight(int N, const IntWeight& mu) {
  if (N < 2) throw std::invalid_argument("SO(N) needs N >= 2");
  if (static_cast<int>(mu.size()) != N / 2) throw std::invalid_argument("weight length must be floor(N/2)");
  if (!is_dominant(N, mu)) throw std::invalid_argument("weight is not dominant");
}

}  // namespace

long so_dimension(int N, const IntWeight& mu) {
  check_weight(N, mu);
  const IntWeight p2 = rho2(N);
  IntWeight m2(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) m2[k] = 2 * mu[k] + p2[k];
  Rational d(1);
  for (const Root& a : positive_roots(N)) d *= Rational(pair(m2, a), pair(p2, a));
  return d.to_long();
}

long o_dimension(const FDLabel& label) {
  validate(label);
  const long d = so_dimension(label.N, label.mu);
  if (label.N % 2 == 0 && label.mu.back() >= 1) return 2 * d;
  return d;
}

std::map<IntWeight, long> dominant_multiplicities(int N, const IntWeight& mu) {
  check_weight(N, mu);
  const int bound = mu.empty() ? 0 : std::abs(mu[0]);
  std::vector<IntWeight> cand;
  IntWeight cur(mu.size());
  enumerate_dominant(N, 0, bound, cur, cand);
  std::vector<std::pair<long, IntWeight>> order;
  for (auto& w : cand) {
    const long h = height(N, mu, w);
    if (h >= 0) order.emplace_back(h, w);
  }
  std::sort(order.begin(), order.end());
  const auto roots = positive_roots(N);
  const IntWeight p2 = rho2(N);
  const long top = shifted_norm(mu, p2);
  std::map<IntWeight, long> mult;
  for (const auto& [h, lam] : order) {
    if (h == 0) {
      mult[lam] = 1;
      continue;
    }
    long sum = 0;
    for (const Root& a : roots) {
      IntWeight w = lam;
      for (int k = 1;; ++k) {
        w[a.i] += a.si;
        if (a.j >= 0) w[a.j] += a.sj;
        bool inside = true;
        for (int x : w)
          if (std::abs(x) > bound) inside = false;
        if (!inside) break;
        auto it = mult.find(dominant_conjugate(N, w));
        if (it != mult.end()) sum += it->second * pair(w, a);
      }
    }
    const long denom = top - shifted_norm(lam, p2);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator not positive");
    if ((8 * sum) % denom) throw std::logic_error("Freudenthal multiplicity not integral");
    const long m = 8 * sum / denom;
    if (m) mult[lam] = m;
  }
  return mult;
}

const Character& so_character(int N, const IntWeight& mu) {
  static std::shared_mutex mtx;
  static std::map<std::pair<int, IntWeight>, std::unique_ptr<Character>> cache;
  const auto key = std::make_pair(N, mu);
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto ch = std::make_unique<Character>();
  if (N == 2) {
    check_weight(N, mu);
    (*ch)[mu] = 1;
  } else {
    for (const auto& [dom, m] : dominant_multiplicities(N, mu)) {
      std::set<IntWeight> ws;
      orbit(N, dom, ws);
      for (const auto& w : ws) (*ch)[w] = m;
    }
    long total = 0;
    for (const auto& [w, m] : *ch) total += m;
    if (total != so_dimension(N, mu)) throw std::logic_error("character does not match the Weyl dimension");
  }
  std::unique_lock lock(mtx);
  auto [it, inserted] = cache.emplace(key, std::move(ch));
  return *it->second;
}

Character restrict_character(int N, const Character& ch) {
  if (N % 2) return ch;
  Character out;
  for (const auto& [w, m] : ch) {
    IntWeight v(w.begin(), w.end() - 1);
    out[v] += m;
  }
  return out;
}

std::map<IntWeight, long> peel(int N, Character ch) {
  std::map<IntWeight, long> out;
  while (!ch.empty()) {
    auto top = std::prev(ch.end());
    const IntWeight hw = top->first;
    const long c = top->second;
    if (c < 0 || !is_dominant(N, hw)) throw std::logic_error("peeling hit a non-dominant or negative top weight");
    out[hw] += c;
    for (const auto& [w, m] : so_character(N, hw)) {
      auto it = ch.find(w);
      if (it == ch.end()) throw std::logic_error("peeling subtracted a missing weight");
      it->second -= c * m;
      if (it->second == 0) ch.erase(it);
    }
  }
  return out;
}

std::map<IntWeight, long> so_branching(int N, const IntWeight& mu) {
  return peel(N - 1, restrict_character(N, so_character(N, mu)));
}

}  // namespace obranch
