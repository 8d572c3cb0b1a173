#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pa/permarray.hpp"

using namespace pa;

namespace {

const DotArray kRank4Example(4, 3,
                             {{3, 4, 1},
                              {4, 2, 2},
                              {1, 4, 3},
                              {3, 3, 3},
                              {2, 3, 4},
                              {3, 2, 4},
                              {4, 1, 4}});

DotArray transverse(int n, int d) {
  std::vector<Position> dots;
  Position x = first_position(n, d);
  do {
    int s = 0;
    for (int c : x) s += c;
    if (s == (d - 1) * n + 1) dots.push_back(x);
  } while (next_position(x, n));
  return DotArray(n, d, std::move(dots));
}

DotArray random_array(std::mt19937& rng, int n, int d, int max_dots) {
  std::uniform_int_distribution<int> coord(1, n);
  std::uniform_int_distribution<int> count(0, max_dots);
  std::vector<Position> dots;
  int m = count(rng);
  for (int i = 0; i < m; ++i) {
    Position x(d);
    for (int j = 0; j < d; ++j) x[j] = coord(rng);
    dots.push_back(std::move(x));
  }
  return DotArray(n, d, std::move(dots));
}

}  // namespace

TEST_CASE("rankability compares all axis ranks") {
  CHECK(is_rankable(DotArray(4, 3, {})) == 0);
  CHECK(is_rankable(kRank4Example) == 4);
  CHECK_FALSE(is_rankable(DotArray(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}})));
}

TEST_CASE("total rankability agrees with the brute-force definition") {
  CHECK(is_totally_rankable(kRank4Example));
  CHECK(is_totally_rankable(DotArray(4, 3, {})));
  CHECK_FALSE(is_totally_rankable(DotArray(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}})));

  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    DotArray p = random_array(rng, 3, 3, 6);
    CHECK(is_totally_rankable(p) == is_totally_rankable_bruteforce(p));
  }
  for (int t = 0; t < 300; ++t) {
    DotArray p = random_array(rng, 4, 2, 6);
    CHECK(is_totally_rankable(p) == is_totally_rankable_bruteforce(p));
  }
}

TEST_CASE("redundant and covered positions, small examples") {
  DotArray p(3, 2, {{1, 2}, {2, 1}});
  CHECK(is_redundant({2, 2}, p));
  CHECK(is_covered({2, 2}, p));
  CHECK_FALSE(is_redundant({1, 2}, p));
  CHECK_FALSE(is_covered({1, 2}, p));
  CHECK_FALSE(is_redundant({3, 3}, p));  // no dot attains either coordinate

  // a dot can be redundant without being covered
  DotArray q(3, 2, {{1, 2}, {2, 2}});
  CHECK(is_redundant({2, 2}, q));       // R = {(2,2),(1,2)}
  CHECK_FALSE(is_covered({2, 2}, q));   // nothing drops axis 2
}

TEST_CASE("bounded witness search matches exhaustive search") {
  std::mt19937 rng(23);
  for (int t = 0; t < 400; ++t) {
    DotArray p = random_array(rng, 3, 3, 7);
    Position x(3);
    std::uniform_int_distribution<int> coord(1, 3);
    for (int j = 0; j < 3; ++j) x[j] = coord(rng);
    CHECK(is_redundant(x, p) == is_redundant_exhaustive(x, p));
    CHECK(is_covered(x, p) == is_covered_exhaustive(x, p));
  }
}

TEST_CASE("permutation-array certificates") {
  CHECK(is_permutation_array(DotArray(4, 2, {{1, 4}, {2, 3}, {3, 1}, {4, 2}}))
            .ok());
  CHECK(is_permutation_array(transverse(4, 3)).ok());
  CHECK(is_permutation_array(transverse(5, 3)).ok());

  auto low_rank = is_permutation_array(DotArray(4, 2, {{1, 4}, {2, 3}}));
  CHECK_FALSE(low_rank.ok());
  CHECK_FALSE(low_rank.rank_is_n);

  // totally rankable of full rank but with a redundant dot
  DotArray red(2, 2, {{1, 2}, {2, 1}, {2, 2}});
  auto cert = is_permutation_array(red);
  CHECK(cert.totally_rankable);
  CHECK_FALSE(cert.no_redundant_dots);
}

TEST_CASE("rank table of the transverse array matches its closed form") {
  for (int n : {3, 4}) {
    for (int d : {2, 3}) {
      DotArray t = transverse(n, d);
      RankTable table = rank_table_of(t);
      Position x = first_position(n, d);
      do {
        int deficit = 0;
        for (int c : x) deficit += n - c;
        CHECK(table.at(x) == std::max(0, n - deficit));
      } while (next_position(x, n));
    }
  }
}

TEST_CASE("rank tables are monotone with unit steps") {
  std::mt19937 rng(31);
  int done = 0;
  while (done < 50) {
    DotArray p = random_array(rng, 3, 3, 6);
    if (!is_totally_rankable(p)) continue;
    ++done;
    RankTable t = rank_table_of(p);
    Position x = first_position(3, 3);
    do {
      for (int j = 1; j <= 3; ++j) {
        int step = t.at(x) - t.at_below(x, j);
        CHECK(step >= 0);
        CHECK(step <= 1);
      }
    } while (next_position(x, 3));
  }
}

TEST_CASE("rank_table_of rejects arrays with disagreeing axis ranks") {
  CHECK_THROWS_AS(rank_table_of(DotArray(4, 3, {{3, 4, 1}, {4, 2, 2}, {1, 4, 3}})),
                  NotTotallyRankable);
}

TEST_CASE("minimal arrays reproduce permutation matrices and T_{4,3}") {
  DotArray w(4, 2, {{1, 4}, {2, 3}, {3, 1}, {4, 2}});
  CHECK(minimal_array_of(rank_table_of(w)) == w);

  DotArray t43 = transverse(4, 3);
  CHECK(minimal_array_of(rank_table_of(t43)) == t43);
  // T_{4,3} really is the antichain with coordinate sum 9
  for (const auto& x : t43.dots()) CHECK(x[0] + x[1] + x[2] == 9);
  CHECK(t43.size() == 10);
}

TEST_CASE("minimal arrays drop covered dots of rank-equivalent arrays") {
  // (2,2) is covered by {(1,2),(2,1)}; the minimal representative omits it
  DotArray fat(2, 2, {{1, 2}, {2, 1}, {2, 2}});
  DotArray thin(2, 2, {{1, 2}, {2, 1}});
  CHECK(rank_table_of(fat) == rank_table_of(thin));
  CHECK(minimal_array_of(rank_table_of(fat)) == thin);
}
