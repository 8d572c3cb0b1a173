#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pa/lattice.hpp"

using namespace pa;

TEST_CASE("dominance is a coordinatewise comparison") {
  CHECK(dominates({1, 2, 3}, {1, 2, 3}));
  CHECK(dominates({1, 1, 1}, {2, 3, 1}));
  CHECK_FALSE(dominates({2, 1}, {1, 2}));
  CHECK_FALSE(dominates({1, 2}, {2, 1}));
  CHECK_THROWS_AS(dominates({1, 2}, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("join and meet are coordinatewise max and min") {
  CHECK(join({{1, 4}, {3, 2}}) == Position{3, 4});
  CHECK(meet({{1, 4}, {3, 2}}) == Position{1, 2});
  CHECK(join({{2, 2, 2}}) == Position{2, 2, 2});
  CHECK(join({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}) == Position{3, 3, 3});
  CHECK_THROWS_AS(join({}), Error);
  CHECK_THROWS_AS(meet({}), Error);
  CHECK_THROWS_AS(join({{1, 2}, {1, 2, 3}}), DimensionMismatch);
}

TEST_CASE("lattice axioms hold on random positions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(1, 5);
  for (int t = 0; t < 200; ++t) {
    Position x(3), y(3), z(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = coord(rng);
      y[i] = coord(rng);
      z[i] = coord(rng);
    }
    // partial order: antisymmetry + transitivity spot checks
    if (dominates(x, y) && dominates(y, x)) CHECK(x == y);
    if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
    // join/meet are bounds
    CHECK(dominates(x, join({x, y})));
    CHECK(dominates(y, join({x, y})));
    CHECK(dominates(meet({x, y}), x));
    // absorption
    CHECK(join({x, meet({x, y})}) == x);
    CHECK(meet({x, join({x, y})}) == x);
  }
}

TEST_CASE("dot arrays canonicalize, validate, and round-trip through JSON") {
  DotArray p(4, 2, {{3, 1}, {1, 4}, {3, 1}, {2, 3}});
  CHECK(p.size() == 3);
  CHECK(p.dots() == std::vector<Position>{{1, 4}, {2, 3}, {3, 1}});
  CHECK(p.contains({2, 3}));
  CHECK_FALSE(p.contains({2, 2}));
  CHECK(DotArray::from_json(p.to_json()) == p);

  CHECK_THROWS_AS(DotArray(4, 2, {{5, 1}}), Error);
  CHECK_THROWS_AS(DotArray(4, 2, {{0, 1}}), Error);
  CHECK_THROWS_AS(DotArray(4, 2, {{1, 2, 3}}), DimensionMismatch);
}

TEST_CASE("principal subarrays keep exactly the dominated dots") {
  DotArray p(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}, {3, 3, 3},
                    {2, 3, 4}, {3, 2, 4}, {4, 1, 4}});
  CHECK(principal_subarray(p, {4, 4, 4}) == p);
  CHECK(principal_subarray(p, {4, 4, 3}) ==
        DotArray(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}, {3, 3, 3}}));
  CHECK(principal_subarray(p, {1, 1, 1}).empty());
  CHECK_THROWS_AS(principal_subarray(p, {4, 4}), DimensionMismatch);
}

TEST_CASE("axis ranks count distinct coordinate values") {
  DotArray p(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}});
  CHECK(rk_axis(p, 1) == 3);
  CHECK(rk_axis(p, 2) == 2);
  CHECK(rk_axis(p, 3) == 3);
  CHECK_THROWS_AS(rk_axis(p, 0), Error);
  CHECK_THROWS_AS(rk_axis(p, 4), Error);
}

TEST_CASE("lexicographic position iteration visits n^d points once") {
  Position x = first_position(3, 2);
  int count = 0;
  std::vector<Position> seen;
  do {
    seen.push_back(x);
    ++count;
  } while (next_position(x, 3));
  CHECK(count == 9);
  CHECK(seen.front() == Position{1, 1});
  CHECK(seen[1] == Position{1, 2});
  CHECK(seen.back() == Position{3, 3});
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}
