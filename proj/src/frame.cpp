#include "obranch/frame.hpp"

#include <stdexcept>

namespace obranch {

int Frame::tau(int a) const {
  if (a == 0) return 0;
  if (a == n && n % 2) return 1;
  return a % 2 ? 0 : 1;
}

int Frame::gen_index(int a, int b) const {
  if (!contains(a) || !contains(b) || a >= b) return -1;
  return index_[a * (n + 1) + b];
}

Frame make_frame(int n, bool sub) {
  if (n < 2) throw InvalidRankError("frames need n >= 2");
  Frame f;
  f.n = n;
  f.sub = sub;
  f.N = sub ? n : n + 1;
  f.lo = sub ? 1 : 0;
  f.hi = n;
  f.rank = f.N / 2;
  const int full_pairs = n / 2;
  const int pairs = sub ? n / 2 : full_pairs;
  for (int k = 0; k < pairs; ++k) f.cartan.emplace_back(2 * k + 1, 2 * k + 2);
  if (!sub) {
    if (n % 2) f.cartan.emplace_back(0, n);
    else f.spare = 0;
  } else if (n % 2) {
    f.spare = n;
  }
  if (static_cast<int>(f.cartan.size()) != f.rank) throw std::logic_error("frame rank mismatch");
  f.index_.assign((n + 1) * (n + 1), -1);
  for (int a = f.lo; a <= f.hi; ++a)
    for (int b = a + 1; b <= f.hi; ++b) {
      f.index_[a * (n + 1) + b] = static_cast<int>(f.gens.size());
      f.gens.push_back({a, b});
    }
  return f;
}

}  // namespace obranch
