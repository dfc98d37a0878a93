#include <doctest.h>

#include <random>

#include "obranch/verma.hpp"

using namespace obranch;

namespace {
/// Singular vectors of weight c in M(a) (x) M(b) for k = 1, by hand: e kills x v0 (x) f v0 + y f v0 (x) v0 iff b x + a y = 0.
int k1_kernel(long a, long b) { return (a == 0 && b == 0) ? 2 : 1; }
}  // namespace

TEST_CASE("fusion examples") {
  CHECK(fusion_multiplicity({Rational(0), Rational(0), Rational(-1)}) == 0);
  CHECK(fusion_multiplicity({Rational(1, 2), Rational(0), Rational(1, 2)}) == 1);
  CHECK(fusion_oracle({Rational(3), Rational(5), Rational(8)}) == 1);
  CHECK(fusion_oracle({Rational(0), Rational(0), Rational(-1)}) == 0);
  CHECK(fusion_oracle({Rational(1, 2), Rational(0), Rational(1, 2)}) == 1);
  // depth one: kernel of the 1x2 matrix (b a)
  CHECK(fusion_oracle({Rational(-2), Rational(-2), Rational(-6)}) == k1_kernel(-2, -2));
  CHECK(fusion_multiplicity({Rational(-2), Rational(-2), Rational(-6)}) == k1_kernel(-2, -2));
  CHECK(fusion_oracle({Rational(0), Rational(0), Rational(-2)}) == 2);
  CHECK(fusion_multiplicity({Rational(0), Rational(0), Rational(-2)}) == 2);
  CHECK(fusion_multiplicity({Rational(5), Rational(3), Rational(10)}) == 0);
}

TEST_CASE("fusion grid") {
  int jumps = 0;
  for (int a = -6; a <= 4; ++a)
    for (int b = -6; b <= 4; ++b)
      for (int k = 0; k <= 8; ++k) {
        const FusionQuery q{Rational(a), Rational(b), Rational(a + b - 2 * k)};
        const int m = fusion_multiplicity(q);
        CHECK(m == fusion_oracle(q));
        jumps += m == 2;
      }
  CHECK(jumps > 0);
}

TEST_CASE("fusion non-integral samples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(2, 7), k(0, 6);
  for (int t = 0; t < 100; ++t) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    if (a.is_integer()) continue;
    const FusionQuery q{a, b, a + b - Rational(2 * k(rng))};
    CHECK(fusion_multiplicity(q) == fusion_oracle(q));
    CHECK(fusion_multiplicity(q) <= 1);
  }
}
