#include <doctest.h>

#include <numeric>

#include "obranch/characters.hpp"

using namespace obranch;

namespace {
/// Gelfand-Tsetlin one-step pattern count for SO(N) -> SO(N-1).
long gt_multiplicity(int N, const IntWeight& mu, const IntWeight& sub) {
  const std::size_t r = mu.size();
  if (N % 2) {
    // SO(2r+1) -> SO(2r): mu_1 >= m_1 >= mu_2 >= ... >= mu_r >= |m_r|
    for (std::size_t k = 0; k + 1 < r; ++k)
      if (sub[k] > mu[k] || sub[k] < mu[k + 1]) return 0;
    if (std::abs(sub[r - 1]) > mu[r - 1]) return 0;
    return 1;
  }
  // SO(2r) -> SO(2r-1): mu_1 >= m_1 >= mu_2 >= ... >= m_{r-1} >= |mu_r|
  for (std::size_t k = 0; k + 1 < r; ++k) {
    if (sub[k] > mu[k] || sub[k] < std::abs(mu[k + 1])) return 0;
  }
  return 1;
}
}  // namespace

TEST_CASE("Weyl dimension") {
  for (int m = 0; m < 6; ++m) CHECK(so_dimension(3, {m}) == 2 * m + 1);
  CHECK(so_dimension(5, {1, 0}) == 5);
  CHECK(so_dimension(5, {1, 1}) == 10);
  CHECK(so_dimension(5, {2, 0}) == 14);
  CHECK(so_dimension(4, {1, 1}) == 3);
  CHECK(so_dimension(4, {1, -1}) == 3);
  CHECK(so_dimension(7, {1, 0, 0}) == 7);
  CHECK(so_dimension(7, {1, 1, 1}) == 35);
  CHECK(so_dimension(6, {1, 1, 0}) == 15);
  CHECK(o_dimension(make_label(4, {1, 1})) == 6);
  CHECK(o_dimension(make_label(4, {2, 0}, -1)) == 9);
}

TEST_CASE("Freudenthal multiplicities") {
  auto m = dominant_multiplicities(5, {1, 0});
  CHECK(m.at({1, 0}) == 1);
  CHECK(m.at({0, 0}) == 1);
  auto a = dominant_multiplicities(5, {1, 1});
  CHECK(a.at({1, 1}) == 1);
  CHECK(a.at({1, 0}) == 1);
  CHECK(a.at({0, 0}) == 2);
  auto s = dominant_multiplicities(6, {1, 1, 0});
  CHECK(s.at({0, 0, 0}) == 3);
}

TEST_CASE("characters sum to the dimension") {
  for (int N : {3, 4, 5, 6, 7}) {
    const int r = N / 2;
    IntWeight mu(static_cast<std::size_t>(r), 0);
    mu[0] = 2;
    if (r > 1) mu[1] = 1;
    const Character& ch = so_character(N, mu);
    long total = 0;
    for (const auto& [w, c] : ch) total += c;
    CHECK(total == so_dimension(N, mu));
  }
}

TEST_CASE("branching matches Gelfand-Tsetlin") {
  for (int N : {4, 5, 6, 7}) {
    const int r = N / 2, rs = (N - 1) / 2;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= a; ++b) {
        IntWeight mu(static_cast<std::size_t>(r), 0);
        mu[0] = a;
        if (r > 1) mu[1] = N % 2 == 0 && r == 2 ? -b : b;
        auto br = so_branching(N, mu);
        long dim = 0;
        for (const auto& [w, c] : br) {
          CHECK(c == 1);
          CHECK_MESSAGE(gt_multiplicity(N, mu, w) == 1, N << " " << a << "," << b);
          dim += c * so_dimension(N - 1, w);
        }
        CHECK(dim == so_dimension(N, mu));
        (void)rs;
      }
  }
}
