#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <random>

#include "doctest.h"
#include "pa/oracle.hpp"

using namespace pa;

namespace {

Poly mono(std::vector<int> e, long long c) {
  Poly p;
  p[std::move(e)] = c;
  return p;
}

}  // namespace

TEST_CASE("small Schubert polynomials are stable across m") {
  for (int m : {4, 6, 8}) {
    auto pad = [m](std::vector<int> e) {
      e.resize(m, 0);
      return e;
    };
    Poly s132 = schubert_polynomial(Permutation::parse("132"), m);
    CHECK(s132.size() == 2);
    CHECK(s132.at(pad({1, 0})) == 1);
    CHECK(s132.at(pad({0, 1})) == 1);
    CHECK(schubert_polynomial(Permutation::parse("213"), m) ==
          mono(pad({1, 0}), 1));
    CHECK(schubert_polynomial(Permutation::parse("231"), m) ==
          mono(pad({1, 1}), 1));
    CHECK(schubert_polynomial(Permutation::parse("312"), m) ==
          mono(pad({2, 0}), 1));
    CHECK(schubert_polynomial(Permutation::parse("321"), m) ==
          mono(pad({2, 1}), 1));
    // a polynomial whose leading term needs the high-variable order
    Poly s1423 = schubert_polynomial(Permutation::parse("1423"), m);
    CHECK(s1423.size() == 3);
    CHECK(s1423.at(pad({2, 0, 0})) == 1);
    CHECK(s1423.at(pad({1, 1, 0})) == 1);
    CHECK(s1423.at(pad({0, 2, 0})) == 1);
  }
}

TEST_CASE("divided differences annihilate and lower correctly") {
  // d_i S_w = S_{w s_i} when the swap shortens w, else 0
  const int m = 6;
  for (const auto& w : symmetric_group(4)) {
    Poly f = schubert_polynomial(w, m);
    for (int i = 1; i < m; ++i) {
      std::vector<int> line;
      for (int k = 1; k <= m; ++k) line.push_back(k <= 4 ? w(k) : k);
      std::swap(line[i - 1], line[i]);
      Permutation ws(line);
      Permutation padded_w(
          [&] {
            std::vector<int> l;
            for (int k = 1; k <= m; ++k) l.push_back(k <= 4 ? w(k) : k);
            return l;
          }());
      Poly d = divided_difference(f, i);
      if (ws.length() < padded_w.length())
        CHECK(d == schubert_polynomial(ws, m));
      else
        CHECK(d.empty());
    }
  }
}

TEST_CASE("basis expansion round-trips every S4 Schubert polynomial") {
  const int m = 8;
  for (const auto& w : symmetric_group(4)) {
    std::vector<int> line;
    for (int k = 1; k <= m; ++k) line.push_back(k <= 4 ? w(k) : k);
    auto e = expand_in_basis(schubert_polynomial(w, m), m);
    REQUIRE(e.size() == 1);
    CHECK(e.begin()->first == Permutation(line));
    CHECK(e.begin()->second == 1);
  }
}

TEST_CASE("transposition-rule products") {
  // S_{s_r} * S_u = sum of S_{u t_{ij}} over i <= r < j with one more inversion
  std::mt19937 rng(7);
  auto group = symmetric_group(4);
  for (int r = 1; r <= 3; ++r) {
    std::vector<int> sr = {1, 2, 3, 4};
    std::swap(sr[r - 1], sr[r]);
    Permutation s(sr);
    for (int t = 0; t < 8; ++t) {
      const Permutation& u = group[rng() % group.size()];
      auto cs = structure_constants(s, u);
      std::map<Permutation, long long> expect;
      for (int i = 1; i <= r; ++i)
        for (int j = r + 1; j <= 4; ++j) {
          std::vector<int> line;
          for (int k = 1; k <= 4; ++k) line.push_back(u(k));
          std::swap(line[i - 1], line[j - 1]);
          Permutation ut(line);
          if (ut.length() == u.length() + 1) expect[ut] += 1;
        }
      CHECK(cs == expect);
    }
  }
}

TEST_CASE("products commute and respect the grading") {
  std::mt19937 rng(11);
  auto group = symmetric_group(4);
  for (int t = 0; t < 6; ++t) {
    const Permutation& u = group[rng() % group.size()];
    const Permutation& v = group[rng() % group.size()];
    auto uv = structure_constants(u, v);
    CHECK(uv == structure_constants(v, u));
    for (const auto& [w, c] : uv) {
      CHECK(c > 0);
      CHECK(w.length() == u.length() + v.length());
    }
  }
}

TEST_CASE("duality: complementary products hit the longest element once") {
  Permutation w0 = Permutation::longest(4);
  for (const auto& u : symmetric_group(4)) {
    Permutation dual = w0.compose(u);  // w0 u
    for (const auto& v : symmetric_group(4)) {
      if (v.length() != 6 - u.length()) continue;
      long long c = structure_constant(u, v, w0);
      CHECK(c == (v == dual ? 1 : 0));
    }
  }
}

TEST_CASE("simple squares in S3") {
  Permutation s1 = Permutation::parse("213");
  auto cs = structure_constants(s1, s1);
  REQUIRE(cs.size() == 1);
  CHECK(cs.at(Permutation::parse("312")) == 1);  // x1^2, no x1x2 term
  CHECK(structure_constant(s1, s1, Permutation::parse("231")) == 0);
  Permutation s2 = Permutation::parse("132");
  auto cs2 = structure_constants(s2, s2);
  CHECK(cs2.at(Permutation::parse("231")) == 1);
  CHECK(cs2.count(Permutation::parse("312")) == 0);
}

TEST_CASE("the six-flag worked problem has two solutions") {
  Permutation u = Permutation::parse("132546");
  Permutation v = Permutation::parse("351246");
  Permutation w = Permutation::parse("316542");
  Permutation w0w = Permutation::longest(6).compose(w);
  CHECK(structure_constant(u, v, w0w) == 2);
}

TEST_CASE("criterion vs oracle over whole symmetric groups") {
  auto z3 = zero_scan(3);
  CHECK(z3.caught == 7);
  CHECK(z3.zeros == 8);
  CHECK(z3.total == 20);
  CHECK(z3.unsound == 0);
  auto z4 = zero_scan(4, "", 4);
  CHECK(z4.caught == 373);
  CHECK(z4.zeros == 425);
  CHECK(z4.total == 581);
  CHECK(z4.unsound == 0);
  auto z5 = zero_scan(5, "", 4);
  CHECK(z5.caught == 28920);
  CHECK(z5.zeros == 33265);
  CHECK(z5.total == 37459);
  CHECK(z5.unsound == 0);
}

TEST_CASE("scan results are reproducible through the pair cache") {
  std::string path = "zero_scan_cache_test.bin";
  std::remove(path.c_str());
  auto first = zero_scan(3, path);
  auto second = zero_scan(3, path);  // all pairs served from the cache
  CHECK(first.caught == second.caught);
  CHECK(first.zeros == second.zeros);
  CHECK(first.total == second.total);
  std::remove(path.c_str());
}
