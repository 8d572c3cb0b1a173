#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "doctest.h"
#include "pa/fano.hpp"
#include "pa/flags.hpp"
#include "pa/problem.hpp"

using namespace pa;
using Rat = mpq_class;

namespace {

Flag<Rat> random_flag(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> e(-9, 9);
  Flag<Rat> f;
  do {
    f.basis.assign(n, std::vector<Rat>(n));
    for (auto& row : f.basis)
      for (auto& x : row) x = e(rng);
  } while (rank_of(f.basis) != n);
  return f;
}

Flag<Rat> standard_flag(int n) { return Flag<Rat>{identity_matrix<Rat>(n)}; }

Flag<Rat> reversed_flag(int n) {
  Flag<Rat> f{Matrix<Rat>(n, std::vector<Rat>(n, 0))};
  for (int i = 0; i < n; ++i) f.basis[i][n - 1 - i] = 1;
  return f;
}

// Replace each basis vector by a random unit-lower-triangular combination;
// this changes the basis but not the flag.
Flag<Rat> remix(std::mt19937& rng, const Flag<Rat>& f) {
  std::uniform_int_distribution<int> e(-3, 3);
  const int n = f.n();
  Flag<Rat> g{Matrix<Rat>(n, std::vector<Rat>(n, 0))};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) {
      Rat c = e(rng);
      for (int j = 0; j < n; ++j) g.basis[i][j] += c * f.basis[k][j];
    }
    for (int j = 0; j < n; ++j) g.basis[i][j] += f.basis[i][j];
  }
  return g;
}

}  // namespace

TEST_CASE("exact elimination: rank, rref, nullspace") {
  CHECK(rank_of(identity_matrix<Rat>(4)) == 4);
  CHECK(rank_of(Matrix<Rat>(3, std::vector<Rat>(5, 0))) == 0);
  Matrix<Rat> m = {{1, 2, 3}, {2, 4, 6}};
  CHECK(rank_of(m) == 1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    Rat dot = 0;
    for (int j = 0; j < 3; ++j) dot += m[0][j] * v[j];
    CHECK(dot == 0);
  }
  CHECK(nullspace(identity_matrix<Rat>(3)).empty());

  // known kernel: x + y + z = 0, y - z = 0  ->  span{(-2, 1, 1)}
  Matrix<Rat> k = {{1, 1, 1}, {0, 1, -1}};
  auto kn = nullspace(k);
  REQUIRE(kn.size() == 1);
  Rat t = kn[0][2];
  CHECK(kn[0][0] == -2 * t);
  CHECK(kn[0][1] == t);
}

TEST_CASE("intersection dimensions via complements") {
  Matrix<Rat> xy = {{1, 0, 0}, {0, 1, 0}};
  Matrix<Rat> yz = {{0, 1, 0}, {0, 0, 1}};
  CHECK(intersection_dim<Rat>({xy, yz}, 3) == 1);
  auto basis = intersection_basis<Rat>({xy, yz}, 3);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == 0);
  CHECK(basis[0][2] == 0);
  CHECK(basis[0][1] != 0);
  CHECK(intersection_dim<Rat>({xy}, 3) == 2);
  CHECK(intersection_dim<Rat>({}, 3) == 3);
}

TEST_CASE("a flag against itself sits in the min-rank position") {
  std::mt19937 rng(3);
  Flag<Rat> f = random_flag(rng, 4);
  Permutation w = relative_position(f, f);
  CHECK(w == Permutation::longest(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(rank_wij(w, i, j) == std::min(i, j));
}

TEST_CASE("standard vs reversed basis is the transverse position") {
  Permutation w = relative_position(standard_flag(4), reversed_flag(4));
  CHECK(w == Permutation::identity(4));
}

TEST_CASE("generic pairs are transverse; basis changes do not matter") {
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    Flag<Rat> f = random_flag(rng, 4), g = random_flag(rng, 4);
    Permutation w = relative_position(f, g);
    CHECK(w == Permutation::identity(4));
    CHECK(relative_position(remix(rng, f), remix(rng, g)) == w);
  }
}

TEST_CASE("swapping the flags inverts up to the column reversal") {
  // pos(G,F) = w0 pos(F,G)^{-1} w0 under this matrix labeling
  std::mt19937 rng(29);
  Permutation w0 = Permutation::longest(4);
  for (int t = 0; t < 20; ++t) {
    Flag<Rat> f = random_flag(rng, 4);
    std::vector<int> sigma = {0, 1, 2, 3};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Flag<Rat> g;
    for (int i : sigma) g.basis.push_back(f.basis[i]);
    g = remix(rng, g);
    Permutation w = relative_position(f, g);
    Permutation v = relative_position(g, f);
    CHECK(v == w0.compose(w.inverse()).compose(w0));
  }
}

TEST_CASE("two-flag arrays match the relative-position matrix") {
  std::mt19937 rng(41);
  for (int t = 0; t < 10; ++t) {
    Flag<Rat> f = random_flag(rng, 4);
    std::vector<int> sigma = {0, 1, 2, 3};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Flag<Rat> g;
    for (int i : sigma) g.basis.push_back(f.basis[i]);
    Permutation w = relative_position(f, g);
    std::vector<Position> dots;
    for (int k = 1; k <= 4; ++k) dots.push_back({w(k), 4 - k + 1});
    CHECK(flags_to_permarray<Rat>({f, g}) == DotArray(4, 2, dots));
  }
}

TEST_CASE("random transverse triples give the transverse array") {
  std::mt19937 rng(53);
  for (int t = 0; t < 5; ++t) {
    std::vector<Flag<Rat>> flags = {random_flag(rng, 3), random_flag(rng, 3),
                                    random_flag(rng, 3)};
    CHECK(flags_to_permarray(flags) == transverse_array(3, 3));
  }
}

TEST_CASE("flag arrays pass the permutation-array certificate") {
  std::mt19937 rng(67);
  for (int t = 0; t < 5; ++t) {
    Flag<Rat> f = random_flag(rng, 4);
    std::vector<int> sigma = {0, 1, 2, 3};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Flag<Rat> g;
    for (int i : sigma) g.basis.push_back(f.basis[i]);
    std::vector<Flag<Rat>> flags = {f, g, random_flag(rng, 4)};
    CHECK(is_permutation_array(flags_to_permarray(flags)).ok());
  }
}

TEST_CASE("the seven matched Fano flags over GF(2)") {
  auto flags = fano_flags();
  REQUIRE(flags.size() == 7);
  for (const auto& f : flags) CHECK(rank_of(f.basis) == 3);
  // each flag's line really contains its point (the matching property)
  for (const auto& f : flags)
    CHECK(intersection_dim<GFp>({f.prefix(1), f.prefix(2)}, 3) == 1);
  DotArray p = flags_to_permarray(flags);
  CHECK(p.n() == 3);
  CHECK(p.d() == 7);
  CHECK(is_permutation_array(p).ok());
}

TEST_CASE("prime-field arithmetic basics") {
  GFp::set_modulus(7);
  CHECK(GFp(3) + GFp(5) == GFp(1));
  CHECK(GFp(3) * GFp(5) == GFp(1));
  CHECK(GFp(3).inverse() == GFp(5));
  CHECK(GFp(1) / GFp(2) == GFp(4));
  CHECK_THROWS_AS(GFp(0).inverse(), Error);
  CHECK_THROWS_AS(GFp::set_modulus(6), UnsupportedAlgebra);
  GFp::set_modulus(2);
  CHECK(GFp(1) + GFp(1) == GFp(0));
}
