#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "pa/el.hpp"

using namespace pa;

namespace {

long long count_arrays(int n, int d) {
  long long c = 0;
  enumerate_permutation_arrays(n, d, [&](const DotArray&) {
    ++c;
    return true;
  });
  return c;
}

// All permutation arrays in [n]^d found by scanning every subset of [n]^d.
std::set<std::vector<Position>> brute_force_arrays(int n, int d) {
  std::vector<Position> cells;
  Position x = first_position(n, d);
  do cells.push_back(x);
  while (next_position(x, n));
  std::set<std::vector<Position>> found;
  for (size_t mask = 0; mask < (size_t{1} << cells.size()); ++mask) {
    std::vector<Position> dots;
    for (size_t i = 0; i < cells.size(); ++i)
      if (mask >> i & 1) dots.push_back(cells[i]);
    DotArray p(n, d, dots);
    if (is_permutation_array(p).ok()) found.insert(p.dots());
  }
  return found;
}

}  // namespace

TEST_CASE("downsizing reproduces the four-step worked run") {
  DotArray p4(4, 2, {{1, 4}, {2, 3}, {3, 1}, {4, 2}});
  DotArray a4(4, 2, {{1, 4}, {2, 3}});
  DotArray p3(4, 2, {{2, 4}, {3, 1}, {4, 2}});
  DotArray a3(4, 2, {{3, 1}});
  DotArray p2(4, 2, {{2, 4}, {4, 2}});
  DotArray p1(4, 2, {{4, 4}});

  CHECK(is_successful(a4, p4));
  CHECK(downsize(a4, p4) == p3);
  CHECK(is_successful(a3, p3));
  CHECK(downsize(a3, p3) == p2);
  CHECK(is_successful(p2, p2));
  CHECK(downsize(p2, p2) == p1);
}

TEST_CASE("downsizing with the empty antichain changes nothing") {
  DotArray p(4, 2, {{1, 4}, {2, 3}, {3, 1}, {4, 2}});
  CHECK(downsize(DotArray(4, 2, {}), p) == p);
  CHECK_FALSE(is_successful(DotArray(4, 2, {}), p));  // rank does not drop
}

TEST_CASE("downsizing validates its antichain argument") {
  DotArray p(4, 2, {{1, 4}, {2, 3}, {3, 1}, {4, 2}});
  CHECK_THROWS_AS(downsize(DotArray(4, 2, {{2, 2}}), p), NotSubset);
  DotArray q(4, 2, {{1, 4}, {1, 3}, {3, 1}});
  CHECK_THROWS_AS(downsize(DotArray(4, 2, {{1, 3}, {1, 4}}), q), NotAntichain);
}

TEST_CASE("exhaustive antichain scan on the 3x3 antidiagonal") {
  // Every one of the 7 nonempty antichains happens to downsize successfully.
  DotArray t(3, 2, {{1, 3}, {2, 2}, {3, 1}});
  int checked = 0;
  for (const auto& a : antichains(t)) {
    if (a.empty()) continue;
    ++checked;
    CHECK(is_successful(a, t));
  }
  CHECK(checked == 7);
}

TEST_CASE("downsizing fails when the rank does not drop") {
  // removing the redundant dot (2,2) leaves the rank at 2
  DotArray p(3, 2, {{1, 2}, {2, 1}, {2, 2}});
  CHECK(is_rankable(p) == 2);
  DotArray a(3, 2, {{2, 2}});
  CHECK(downsize(a, p) == DotArray(3, 2, {{1, 2}, {2, 1}}));
  CHECK_FALSE(is_successful(a, p));
}

TEST_CASE("enumeration counts: d=2 gives the permutation matrices") {
  CHECK(count_arrays(3, 2) == 6);
  CHECK(count_arrays(4, 2) == 24);
  CHECK(count_arrays(2, 1) == 1);
}

TEST_CASE("enumeration matches brute force on small lattices") {
  for (auto [n, d] : {std::pair{2, 3}, {2, 4}, {3, 2}}) {
    auto brute = brute_force_arrays(n, d);
    std::set<std::vector<Position>> emitted;
    enumerate_permutation_arrays(n, d, [&](const DotArray& p) {
      CHECK(is_permutation_array(p).ok());
      CHECK(emitted.insert(p.dots()).second);  // no duplicates
      return true;
    });
    CHECK(emitted == brute);
  }
}

TEST_CASE("every enumerated array is valid, unique, and round-trips") {
  std::set<std::vector<Position>> seen;
  enumerate_permutation_arrays(3, 3, [&](const DotArray& p) {
    CHECK(is_permutation_array(p).ok());
    CHECK(seen.insert(p.dots()).second);
    CHECK(minimal_array_of(rank_table_of(p)) == p);
    CHECK(assemble_from_slices(slice_sequence(p)) == p);
    return true;
  });
  CHECK(seen.size() > 6);  // strictly more than the d=2 count embeds
}

TEST_CASE("early exit stops the stream") {
  int emitted = 0;
  bool finished = enumerate_permutation_arrays(4, 2, [&](const DotArray&) {
    return ++emitted < 5;
  });
  CHECK_FALSE(finished);
  CHECK(emitted == 5);
}

TEST_CASE("the assembled worked example and its slices") {
  DotArray p(4, 3, {{4, 4, 1}, {2, 4, 2}, {4, 2, 2}, {3, 1, 3}, {1, 4, 4},
                    {2, 3, 4}});
  CHECK(is_permutation_array(p).ok());
  auto slices = slice_sequence(p);
  REQUIRE(slices.size() == 4);
  CHECK(slices[0] == DotArray(4, 2, {{4, 4}}));
  CHECK(slices[1] == DotArray(4, 2, {{2, 4}, {4, 2}}));
  CHECK(slices[2] == DotArray(4, 2, {{2, 4}, {3, 1}, {4, 2}}));
  CHECK(slices[3] == DotArray(4, 2, {{1, 4}, {2, 3}, {3, 1}, {4, 2}}));
  for (int i = 0; i < 4; ++i) {
    CHECK(is_totally_rankable(slices[i]));
    CHECK(is_rankable(slices[i]) == i + 1);
    for (const auto& x : slices[i].dots()) CHECK_FALSE(is_redundant(x, slices[i]));
  }
  CHECK(assemble_from_slices(slices) == p);
}

TEST_CASE("slice_sequence rejects non-permutation arrays") {
  CHECK_THROWS_AS(slice_sequence(DotArray(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}})),
                  NotPermutationArray);
}
