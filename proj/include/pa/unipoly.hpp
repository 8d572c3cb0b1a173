#pragma once

// Exact univariate polynomials over the rationals: arithmetic, gcd,
// resultants and discriminants, and complete factorization (square-free
// decomposition, small-prime modular factorization, Hensel lifting,
// exhaustive recombination).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace pa {

// Coefficients low to high; trailing zeros stripped (zero == empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpq_class> coeffs);
  static UniPoly constant(const mpq_class& a);
  static UniPoly variable();  // x

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& operator[](int i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& leading() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const mpq_class& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // Euclidean division; the divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly derivative() const;
  mpq_class evaluate(const mpq_class& a) const;
  UniPoly monic() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<mpq_class> c_;
  void strip();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic
mpq_class resultant(const UniPoly& f, const UniPoly& g);

// (-1)^{d(d-1)/2} res(p, p') / lc(p); degree >= 2 required.
mpq_class discriminant(const UniPoly& p);
bool is_rational_square(const mpq_class& q);

struct Factor {
  UniPoly poly;  // monic irreducible
  int multiplicity = 1;
};

// Complete factorization over Q of a nonzero polynomial; the returned
// factors are monic and the constant lc is implicit.
std::vector<Factor> factor_rationals(const UniPoly& p);

bool is_irreducible_over_Q(const UniPoly& p);

}  // namespace pa
