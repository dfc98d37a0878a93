#include <doctest.h>

#include "obranch/scalars.hpp"

using namespace obranch;

namespace {
const Rational h(1, 2);
ScalarQuery Q(int n, int i, int eps, std::initializer_list<Rational> l, std::initializer_list<Rational> v) {
  return ScalarQuery{rank_context(n), i, eps, make_weight(l), make_weight(v)};
}
std::vector<Rational> point(const ScalarQuery& q) {
  std::vector<Rational> x;
  for (Eigen::Index k = 0; k < q.lambda.size(); ++k) x.push_back(q.lambda(k));
  for (Eigen::Index k = 0; k < q.nu.size(); ++k) x.push_back(q.nu(k));
  return x;
}
}  // namespace

TEST_CASE("h") {
  CHECK(h_val(Q(4, 1, 1, {3 * h, h}, {1, 0})) == Rational(3));
  CHECK(h_val(Q(3, 2, 1, {1, 0}, {h})) == Rational(0));
  CHECK(h_val(Q(4, 1, 1, {2, 1}, {1, 0})) == Rational(6));
}

TEST_CASE("phi") {
  CHECK(phi_val(Q(4, 1, 1, {3 * h, h}, {1, 0})) == Rational(12));
  CHECK(phi_val(Q(3, 1, -1, {2, 1}, {h})) == Rational(-12));
  CHECK(phi_val(Q(4, 1, -1, {h, Rational(1, 4)}, {1, 0})) == Rational(0));
}

TEST_CASE("g") {
  CHECK(g_val(Q(4, 1, 1, {3 * h, h}, {1, 0})) == Rational(12));
  CHECK(g_val(Q(3, 1, -1, {2, 1}, {h})) == Rational(-4));
  CHECK(g_val(Q(4, 1, 1, {h, Rational(1, 3)}, {1, 0})) == Rational(0));
}

TEST_CASE("C = g / phi") {
  CHECK(C_val(Q(4, 1, 1, {3 * h, h}, {1, 0})).value() == Rational(1));
  CHECK(C_val(Q(3, 1, 1, {2, 0}, {h})).value() == Rational(3, 4));
  auto u = C_val(Q(4, 1, 1, {1, 1}, {1, 0}));
  CHECK_FALSE(u.defined);
  CHECK_THROWS_AS(u.value(), std::domain_error);
}

TEST_CASE("nonvanishing predicate") {
  CHECK(nonvanishing_predicate(Q(4, 1, 1, {3 * h, h}, {1, 0})));
  CHECK_FALSE(nonvanishing_predicate(Q(4, 1, 1, {h, Rational(1, 3)}, {1, 0})));
  CHECK_FALSE(nonvanishing_predicate(Q(4, 1, 1, {-h, Rational(1, 3)}, {2, 3})));
  // n odd: lambda_i + eps/2 = 0 is allowed
  CHECK(nonvanishing_predicate(Q(3, 1, 1, {-h, 2}, {1})));
}

TEST_CASE("b closed forms") {
  const RankContext c4 = rank_context(4);
  const Weight l = make_weight({3 * h, h}), v = make_weight({1, 0});
  CHECK(b_closed(1, c4, l, v) == Rational(0));
  CHECK(b_closed(2, c4, l, v) == Rational(0));
  CHECK(b_closed(3, c4, l, v) == Rational(0));
  CHECK_THROWS_AS(b_closed(4, c4, l, v), std::out_of_range);
  const RankContext c3 = rank_context(3);
  const Weight l3 = make_weight({2, 1}), v3 = make_weight({Rational(3, 2)});
  CHECK(b_closed(2, c3, l3, v3) == Rational(5) - Rational(9, 4) - Rational(3, 4));
}

TEST_CASE("polynomial forms agree with values") {
  for (int n : {2, 3, 4, 5}) {
    const RankContext ctx = rank_context(n);
    for (int i = 1; i <= ctx.r; ++i)
      for (int eps : {1, -1}) {
        ScalarQuery q{ctx, i, eps, Weight(ctx.r), Weight(ctx.s)};
        for (int k = 0; k < ctx.r; ++k) q.lambda(k) = Rational(2 * k + 7, 3 + k);
        for (int k = 0; k < ctx.s; ++k) q.nu(k) = Rational(k - 4, 5);
        CHECK(g_poly(ctx, i, eps).eval(point(q)) == g_val(q));
        CHECK(phi_poly(ctx, i, eps).eval(point(q)) == phi_val(q));
      }
    for (int ell : {1, 2, 3}) {
      ScalarQuery q{ctx, 1, 1, Weight(ctx.r), Weight(ctx.s)};
      for (int k = 0; k < ctx.r; ++k) q.lambda(k) = Rational(k + 1, 2);
      for (int k = 0; k < ctx.s; ++k) q.nu(k) = Rational(3 * k - 1, 4);
      CHECK(b_closed_poly(ell, ctx).eval(point(q)) == b_closed(ell, ctx, q.lambda, q.nu));
    }
  }
  CHECK(lambda_nu_names(rank_context(3)) == std::vector<std::string>{"l1", "l2", "v1"});
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(g_val(Q(4, 3, 1, {1, 2}, {1, 0})), std::out_of_range);
  CHECK_THROWS_AS(g_val(Q(4, 1, 0, {1, 2}, {1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(g_val(Q(4, 1, 1, {1}, {1, 0})), std::invalid_argument);
}
