#include <doctest.h>

#include <algorithm>

#include "obranch/weights.hpp"

using namespace obranch;

namespace {
bool contains(const std::vector<Weight>& v, const Weight& w) {
  return std::any_of(v.begin(), v.end(), [&](const Weight& x) { return equal(x, w); });
}
}  // namespace

TEST_CASE("rank context") {
  auto c4 = rank_context(4);
  CHECK(c4.r == 2);
  CHECK(c4.s == 2);
  CHECK(c4.n_even());
  auto c3 = rank_context(3);
  CHECK(c3.r == 2);
  CHECK(c3.s == 1);
  CHECK(c3.n_odd());
  CHECK_THROWS_AS(rank_context(1), InvalidRankError);
}

TEST_CASE("rho") {
  CHECK(equal(rho(rank_context(4)), make_weight({Rational(3, 2), Rational(1, 2)})));
  CHECK(equal(rho(rank_context(3)), make_weight({1, 0})));
  CHECK(equal(rho(rank_context(2)), make_weight({Rational(1, 2)})));
  CHECK(equal(rho_sub(rank_context(4)), make_weight({1, 0})));
  CHECK(equal(rho_sub(rank_context(3)), make_weight({Rational(1, 2)})));
}

TEST_CASE("nonsingular and norms") {
  CHECK(is_nonsingular(make_weight({Rational(3, 2), Rational(1, 2)})));
  CHECK_FALSE(is_nonsingular(make_weight({2, 0})));
  CHECK_FALSE(is_nonsingular(make_weight({1, -1})));
  auto a = norms(make_weight({Rational(3, 2), Rational(-1, 2)}));
  CHECK(a.l1 == Rational(2));
  CHECK(a.l2_squared == Rational(10, 4));
  auto b = norms(make_weight({2, 1}));
  CHECK(b.l1 == Rational(3));
  CHECK(b.l2_squared == Rational(5));
  CHECK(norm2(make_weight({0, 0})) == Rational(0));
}

TEST_CASE("parse and format") {
  Weight w = parse_weight("9/2, 5/2");
  CHECK(equal(w, make_weight({Rational(9, 2), Rational(5, 2)})));
  CHECK(format_weight(w) == "(9/2,5/2)");
  CHECK_THROWS_AS(parse_weight("1,,2"), std::invalid_argument);
  CHECK(lex_less(make_weight({1, 2}), make_weight({1, 3})));
  CHECK_FALSE(lex_less(make_weight({2, 0}), make_weight({1, 3})));
}

TEST_CASE("root set and positive systems") {
  CHECK(root_set(2).size() == 8);
  CHECK(root_set(3).size() == 18);
  auto pos = positive_system(make_weight({Rational(7, 2), Rational(3, 2)}));
  CHECK(pos.size() == 4);
  auto p1 = positive_system(make_weight({Rational(5, 2)}));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].str() == "e1");
  CHECK_THROWS_AS(positive_system(make_weight({1, 1})), SingularWeightError);
  // half of all roots are positive for integral nonsingular weights
  CHECK(positive_system(make_weight({3, -1, 2})).size() == 9);
}

TEST_CASE("chamber membership") {
  const Weight xi = make_weight({Rational(7, 2), Rational(3, 2)});
  CHECK(in_chamber(xi, make_weight({Rational(5, 2), Rational(1, 2)})));
  CHECK_FALSE(in_chamber(xi, make_weight({Rational(1, 2), Rational(3, 2)})));
  CHECK(in_chamber(xi, xi));
}

TEST_CASE("lattice box") {
  const Weight xi = make_weight({Rational(5, 2), Rational(3, 2)});
  auto b0 = lattice_box(xi, Rational(0));
  REQUIRE(b0.size() == 1);
  CHECK(equal(b0[0], xi));
  auto b1 = lattice_box(xi, Rational(1));
  CHECK(contains(b1, xi));
  CHECK(contains(b1, make_weight({Rational(7, 2), Rational(3, 2)})));
  CHECK(contains(b1, make_weight({Rational(5, 2), Rational(1, 2)})));
  CHECK(b1.size() == 3);
  CHECK(lattice_box(xi, Rational(-1)).empty());
  for (const Weight& w : lattice_box(xi, Rational(4))) {
    CHECK(in_chamber(xi, w));
    CHECK(norms(Weight(w - xi)).l1 <= Rational(4));
  }
}

TEST_CASE("signed permutations") {
  Weight x = make_weight({1, 2, 3});
  Weight y = apply_signed_permutation(x, {2, 0, 1}, {1, -1, 1});
  CHECK(equal(y, make_weight({3, -1, 2})));
}
