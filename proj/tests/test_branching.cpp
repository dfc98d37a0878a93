#include <doctest.h>

#include "obranch/branching.hpp"
#include "obranch/characters.hpp"

using namespace obranch;

namespace {
const Rational h(1, 2);
}

TEST_CASE("labels") {
  CHECK(make_label(5, {2, 0}).str() == "O(5)[2,0]+");
  CHECK(make_label(4, {1, 1}, 1).sign == 0);
  CHECK(make_label(4, {1, 0}, -1).needs_sign());
  CHECK_THROWS_AS(make_label(5, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_label(5, {1}), std::invalid_argument);
  CHECK(equal(inf_char_of(make_label(5, {1, 0})), make_weight({5 * h, h})));
  CHECK(equal(inf_char_of(make_label(5, {0, 0})), make_weight({3 * h, h})));
  CHECK(equal(inf_char_of(make_label(4, {1, 0}, 1)), make_weight({2, 0})));
  CHECK(casimir_scalar(make_label(5, {1, 0})) == Rational(4));
  // both signs where the label needs one
  CHECK(labels_up_to(4, 1).size() == 5);
  CHECK(labels_up_to(5, 1).size() == 6);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_multiplicity(make_label(5, {1, 0}), make_label(4, {0, 0}, 1)) == 1);
  CHECK(oracle_multiplicity(make_label(5, {3, 3}), make_label(4, {1, 0}, 1)) == 0);
  CHECK(oracle_multiplicity(make_label(5, {4, 2}), make_label(4, {3, 1})) == 1);
  CHECK(oracle_multiplicity(make_label(5, {0, 0}), make_label(4, {0, 0}, 1)) == 1);
  CHECK(oracle_multiplicity(make_label(5, {0, 0}, -1), make_label(4, {0, 0}, 1)) == 0);
}

TEST_CASE("oracle decompositions exhaust the dimension") {
  for (int N : {3, 4, 5, 6}) {
    for (const FDLabel& L : labels_up_to(N, 3)) {
      long dim = 0;
      for (const auto& [l, m] : oracle_branching(L)) {
        CHECK(m == 1);
        dim += m * o_dimension(l);
      }
      CHECK_MESSAGE(dim == o_dimension(L), L.str());
    }
  }
}

TEST_CASE("interlacing predicate") {
  CHECK(interlace_predicate(make_label(5, {4, 2}), make_label(4, {3, 1})) == 1);
  CHECK(interlace_predicate(make_label(5, {3, 3}), make_label(4, {1, 0}, 1)) == 0);
  CHECK(interlace_predicate(make_label(5, {0, 0}), make_label(4, {0, 0}, 1)) == 1);
  for (int N : {3, 4, 5, 6, 7})
    for (const FDLabel& L : labels_up_to(N, 3))
      for (const FDLabel& l : labels_up_to(N - 1, 3)) CHECK(interlace_predicate(L, l) == oracle_multiplicity(L, l));
}

TEST_CASE("reduced families") {
  const RankContext c2 = rank_context(2);
  auto f = reduced_family(c2, 1, 3);
  CHECK(f.size() == 4);
  for (std::size_t m = 0; m < f.size(); ++m) {
    CHECK(f[m].mu == std::vector<int>{static_cast<int>(m)});
    CHECK(f[m].sign == 1);
  }
  const RankContext c3 = rank_context(3);
  CHECK(equal(family_base(c3), make_weight({2, 1})));
  for (const FDLabel& L : reduced_family(c3, 1, 4)) {
    CHECK(L.mu[1] >= 1);
    CHECK(L.sign == 0);
  }
  auto one = reduced_family(rank_context(4), -1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].mu == std::vector<int>{0, 0});
  CHECK(one[0].sign == -1);
  CHECK(label_of(rank_context(4), make_weight({7 * h, 3 * h}), 1).mu == std::vector<int>{2, 1});
  CHECK_THROWS(label_of(rank_context(4), make_weight({Rational(7, 3), 3 * h}), 1));
}

TEST_CASE("stability scan") {
  const RankContext ctx = rank_context(4);
  const FDLabel pi = make_label(4, {3, 1});
  const auto rep = stability_scan(ctx, make_weight({13 * h, 5 * h}), pi, 4);
  CHECK(rep.region.away_from_fences);
  CHECK(rep.constant);
  CHECK_FALSE(rep.samples.empty());
  for (const auto& [l, m] : rep.samples) CHECK(m == 1);
  bool drop = false;
  for (const auto& c : rep.fence_crossings)
    if (equal(c.to, make_weight({7 * h, 5 * h}))) drop = c.change == -1;
  CHECK(drop);
  CHECK_THROWS_AS(stability_scan(ctx, make_weight({7 * h, 3 * h}), make_label(4, {0, 0}, 1), 2), PreconditionError);
}
