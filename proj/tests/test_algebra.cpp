#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pa/algebra.hpp"
#include "pa/errors.hpp"

using namespace pa;

namespace {

UniPoly up(std::vector<long> c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return UniPoly(std::move(q));
}

TPoly tp(std::vector<long> c) {
  TPoly p;
  for (long x : c) p.emplace_back(mpq_class(x));
  return p;
}

}  // namespace

TEST_CASE("rational factorization golden cases") {
  auto f1 = factor_rationals(up({-1, 0, 1}));  // x^2 - 1
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].poly == up({-1, 1}));
  CHECK(f1[1].poly == up({1, 1}));
  CHECK(f1[0].multiplicity == 1);

  CHECK(is_irreducible_over_Q(up({1, 0, 1})));       // x^2 + 1
  CHECK(is_irreducible_over_Q(up({-20, 10, 1})));    // c^2 + 10c - 20
  CHECK(is_irreducible_over_Q(up({-2, 0, 0, 0, 1})));  // x^4 - 2

  // the quintic from the six-flag example family
  UniPoly quintic = up({-32, 194, -536, 887, -554, 101});
  CHECK(is_irreducible_over_Q(quintic));
  CHECK_FALSE(is_rational_square(discriminant(quintic)));

  // multiplicities: (x - 1)^2 (x + 2)
  auto f2 = factor_rationals(up({-1, 1}) * up({-1, 1}) * up({2, 1}));
  REQUIRE(f2.size() == 2);
  bool saw_sq = false, saw_lin = false;
  for (const auto& f : f2) {
    if (f.poly == up({-1, 1})) {
      CHECK(f.multiplicity == 2);
      saw_sq = true;
    }
    if (f.poly == up({2, 1})) {
      CHECK(f.multiplicity == 1);
      saw_lin = true;
    }
  }
  CHECK(saw_sq);
  CHECK(saw_lin);

  // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
  auto f3 = factor_rationals(up({-1, 0, 0, 0, 0, 0, 1}));
  REQUIRE(f3.size() == 4);
  int linear = 0, quad = 0;
  for (const auto& f : f3) (f.poly.degree() == 1 ? linear : quad)++;
  CHECK(linear == 2);
  CHECK(quad == 2);
}

TEST_CASE("factorizations recompose to the input") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    // product of random small factors
    UniPoly p = UniPoly::constant(1);
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      int d = 1 + static_cast<int>(rng() % 3);
      std::vector<mpq_class> c;
      for (int j = 0; j <= d; ++j)
        c.emplace_back(static_cast<long>(rng() % 11) - 5);
      if (c.back() == 0) c.back() = 1;
      p = p * UniPoly(std::move(c));
    }
    if (p.degree() < 1) continue;
    UniPoly rebuilt = UniPoly::constant(p.leading());
    for (const auto& f : factor_rationals(p)) {
      CHECK(is_irreducible_over_Q(f.poly));
      for (int i = 0; i < f.multiplicity; ++i) rebuilt = rebuilt * f.poly;
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("discriminants and squares") {
  // x^2 + bx + c -> b^2 - 4c; x^3 + px + q -> -4p^3 - 27q^2
  CHECK(discriminant(up({-20, 10, 1})) == 180);
  CHECK(discriminant(up({3, 7, 1})) == 49 - 12);
  CHECK(discriminant(up({-2, 5, 0, 1})) == mpq_class(-4 * 125 - 27 * 4));
  CHECK(is_rational_square(mpq_class(4, 9)));
  CHECK(is_rational_square(mpq_class(0)));
  CHECK_FALSE(is_rational_square(mpq_class(180)));
  CHECK_FALSE(is_rational_square(mpq_class(-4)));
  // discriminant zero exactly when the polynomial is not square-free
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<mpq_class> c;
    int d = 2 + static_cast<int>(rng() % 4);
    for (int j = 0; j <= d; ++j)
      c.emplace_back(static_cast<long>(rng() % 9) - 4);
    if (c.back() == 0) c.back() = 1;
    UniPoly p(std::move(c));
    bool sf = gcd(p, p.derivative()).degree() == 0;
    CHECK((discriminant(p) != 0) == sf);
  }
}

TEST_CASE("resultant of polynomials with a common root vanishes") {
  UniPoly a = up({-1, 1}) * up({3, 2, 1});
  UniPoly b = up({-1, 1}) * up({5, 1});
  CHECK(resultant(a, b) == 0);
  CHECK(resultant(up({3, 1}), up({5, 1})) != 0);
}

TEST_CASE("a quadratic extension behaves like a field") {
  auto r = adjoin_root(nullptr, tp({-5, 0, 1}), "r");  // r^2 = 5
  REQUIRE(r.tower != nullptr);
  CHECK(r.tower->height() == 1);
  FieldElement a = r.root;
  CHECK(a * a == FieldElement(5));
  CHECK((FieldElement(1) + a) * (FieldElement(1) - a) == FieldElement(-4));
  // 1 / (1 + r) = (r - 1) / 4
  FieldElement inv = (FieldElement(1) + a).inverse();
  CHECK(inv * (FieldElement(1) + a) == FieldElement(1));
  CHECK(inv == (a - FieldElement(1)) / FieldElement(4));
  // the defining polynomial vanishes on the adjoined root
  CHECK(tp_eval(tp({-5, 0, 1}), a).is_zero());
}

TEST_CASE("reducible defining polynomials are reported with their factors") {
  CHECK_THROWS_AS(adjoin_root(nullptr, tp({-1, 0, 1}), "c"), Reducible);
  try {
    adjoin_root(nullptr, tp({-2, -1, 1}), "g");
    FAIL("expected Reducible");
  } catch (const Reducible& e) {
    std::string msg = e.what();
    CHECK(msg.find("x + 1") != std::string::npos);
    CHECK(msg.find("x - 2") != std::string::npos);
  }
}

TEST_CASE("degree-one adjunction solves in place") {
  // c + 1/2 = 0 -> c = -1/2, no extension
  TPoly p = {FieldElement(mpq_class(1, 2)), FieldElement(1)};
  auto r = adjoin_root(nullptr, p, "c");
  CHECK(r.tower == nullptr);
  CHECK(r.root == FieldElement(mpq_class(-1, 2)));
}

TEST_CASE("random field arithmetic identities in a quadratic tower") {
  auto ext = adjoin_root(nullptr, tp({-20, 10, 1}), "c");
  std::mt19937 rng(9);
  auto rand_elem = [&]() {
    FieldElement x(static_cast<long>(rng() % 13) - 6);
    return x + ext.root * FieldElement(static_cast<long>(rng() % 13) - 6);
  };
  for (int t = 0; t < 40; ++t) {
    FieldElement x = rand_elem(), y = rand_elem(), z = rand_elem();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x - x == FieldElement(0));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == FieldElement(1));
      CHECK((x / x) == FieldElement(1));
    }
  }
}

TEST_CASE("factorization by norm descent over a quadratic field") {
  auto r5 = adjoin_root(nullptr, tp({-5, 0, 1}), "r");
  // x^2 - x - 1 splits over Q(sqrt 5): roots (1 +- r)/2
  auto fs = factor_over(r5.tower, tp({-1, -1, 1}));
  REQUIRE(fs.size() == 2);
  for (const auto& f : fs) {
    CHECK(tp_degree(f.poly) == 1);
    FieldElement root = -(f.poly[0] / f.poly[1]);
    CHECK((root * root - root - FieldElement(1)).is_zero());
  }
  // x^2 - 5 splits into (x - r)(x + r)
  auto g = factor_over(r5.tower, tp({-5, 0, 1}));
  REQUIRE(g.size() == 2);
  // x^2 + 1 stays irreducible
  CHECK(is_irreducible_over(r5.tower, tp({1, 0, 1})));
  // x^4 - 5 = (x^2 - r)(x^2 + r)
  auto h = factor_over(r5.tower, tp({-5, 0, 0, 0, 1}));
  REQUIRE(h.size() == 2);
  CHECK(tp_degree(h[0].poly) == 2);
  CHECK(tp_degree(h[1].poly) == 2);
  // recompose
  TPoly prod = tp({1});
  for (const auto& f : h) prod = tp_mul(prod, f.poly);
  CHECK(tp_degree(tp_sub(prod, tp({-5, 0, 0, 0, 1}))) == -1);
}

TEST_CASE("a height-two tower supports arithmetic but not factorization") {
  auto r5 = adjoin_root(nullptr, tp({-5, 0, 1}), "r");
  TPoly x2m2 = {FieldElement(-2), FieldElement(0), FieldElement(1)};
  auto s2 = adjoin_root(r5.tower, x2m2, "s");
  REQUIRE(s2.tower->height() == 2);
  FieldElement sum = lift_to(r5.root, s2.tower) + s2.root;
  // (sqrt5 + sqrt2)^2 = 7 + 2*sqrt10
  FieldElement sq = sum * sum;
  CHECK(sq - FieldElement(7) == FieldElement(2) * lift_to(r5.root, s2.tower) * s2.root);
  CHECK(sum * sum.inverse() == FieldElement(1));
  // no third layer by default
  TPoly x2m3 = {FieldElement(-3), FieldElement(0), FieldElement(1)};
  CHECK_THROWS_AS(adjoin_root(s2.tower, x2m3, "t"), TowerHeightExceeded);
  CHECK_THROWS_AS(factor_over(s2.tower, x2m3), UnsupportedAlgebra);
  // but an explicit cap raise changes the failure mode
  CHECK_THROWS_AS(adjoin_root(s2.tower, x2m3, "t", 3), UnsupportedAlgebra);
}

TEST_CASE("linear algebra over an extension field") {
  auto r5 = adjoin_root(nullptr, tp({-5, 0, 1}), "r");
  FieldElement a = r5.root;
  // rows (1, r), (r, 5) are dependent; (1, r), (r, 4) are not
  Matrix<FieldElement> dep = {{FieldElement(1), a}, {a, FieldElement(5)}};
  Matrix<FieldElement> ind = {{FieldElement(1), a}, {a, FieldElement(4)}};
  CHECK(rank_of(dep) == 1);
  CHECK(rank_of(ind) == 2);
  auto ns = nullspace(dep);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + a * ns[0][1] == FieldElement(0));
}

TEST_CASE("multivariate polynomial ring operations") {
  MultiPoly x = MultiPoly::variable(0);
  MultiPoly y = MultiPoly::variable(1);
  MultiPoly one = MultiPoly::constant(FieldElement(1));
  MultiPoly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.coeff_of(0, 2) == one);
  CHECK(p.substitute(1, FieldElement(3)) ==
        x * x - MultiPoly::constant(FieldElement(9)));
  // substitution of a polynomial: y <- x + 1 in x*y gives x^2 + x
  CHECK((x * y).substitute(1, x + one) == x * x + x);
  TPoly u;
  CHECK(p.substitute(1, FieldElement(0)).univariate_in(0, &u));
  CHECK(tp_degree(u) == 2);
  CHECK_FALSE(p.univariate_in(0, &u));
  CHECK(p.vars_used() == std::vector<int>{0, 1});
}

TEST_CASE("determinants, minors, and rank agree") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 3);
    int cols = 2 + static_cast<int>(rng() % 3);
    ExactMatrix m(rows, std::vector<MultiPoly>(cols));
    Matrix<mpq_class> q(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        long v = static_cast<long>(rng() % 7) - 3;
        q[i][j] = v;
        m[i][j] = MultiPoly::constant(FieldElement(v));
      }
    int r = rank_of(q);
    CHECK(constant_rank(m) == r);
    // the rank is the largest k with a nonzero k x k minor
    for (int k = 1; k <= std::min(rows, cols); ++k) {
      bool any = false;
      for (const auto& d : minors_k(m, k))
        if (!d.is_zero()) any = true;
      CHECK(any == (k <= r));
    }
  }
}

TEST_CASE("minors alternate under row swaps") {
  ExactMatrix m(3, std::vector<MultiPoly>(3));
  std::mt19937 rng(23);
  for (auto& row : m)
    for (auto& e : row)
      e = MultiPoly::constant(FieldElement(static_cast<long>(rng() % 9) - 4));
  MultiPoly d = poly_determinant(m);
  std::swap(m[0], m[2]);
  CHECK(poly_determinant(m) == -d);
}

TEST_CASE("symbolic minors track an indeterminate") {
  MultiPoly t = MultiPoly::variable(0);
  MultiPoly one = MultiPoly::constant(FieldElement(1));
  ExactMatrix m = {{one, t}, {t, one}};
  MultiPoly d = poly_determinant(m);
  CHECK(d == one - t * t);
  TPoly u;
  REQUIRE(d.univariate_in(0, &u));
  auto fs = factor_over(nullptr, u);
  CHECK(fs.size() == 2);  // (1 - t)(1 + t) up to sign
}
