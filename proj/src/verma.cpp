#include "obranch/verma.hpp"

#include "obranch/linalg.hpp"

namespace obranch {

namespace {

/// k = (a+b-c)/2 when a+b-c lies in 2N, otherwise -1.
long depth(const FusionQuery& q) {
  Rational d = q.a + q.b - q.c;
  if (!d.is_integer() || d.sign() < 0) return -1;
  long v = d.to_long();
  return v % 2 == 0 ? v / 2 : -1;
}

}  // namespace

int fusion_multiplicity(const FusionQuery& q) {
  if (depth(q) < 0) return 0;
  const bool integral = q.a.is_integer() && q.b.is_integer() && q.c.is_integer();
  if (integral && q.a + q.b + q.c >= Rational(-2) && (q.a - q.b).abs() <= -q.c - Rational(2)) return 2;
  return 1;
}

int fusion_oracle(const FusionQuery& q) {
  const long k = depth(q);
  if (k < 0) return 0;
  if (k == 0) return 1;
  // Columns v_p (x) v_{k-p}, rows v_p (x) v_{k-1-p}.
  MatQ e = MatQ::Zero(k, k + 1);
  for (long p = 0; p <= k; ++p) {
    const long m = k - p;
    if (p >= 1) e(p - 1, p) += Rational(p) * (q.a - Rational(p) + Rational(1));
    if (m >= 1) e(p, p) += Rational(m) * (q.b - Rational(m) + Rational(1));
  }
  return static_cast<int>(k + 1 - rank(e));
}

}  // namespace obranch
