#pragma once

// Exact arithmetic in towers of algebraic extensions of Q, multivariate
// polynomials over such towers, and the factorization / root-adjunction
// machinery used by the intersection solver.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pa/matrix.hpp"
#include "pa/unipoly.hpp"

namespace pa {

class FieldTower;

// The base field Q is the empty tower (a null pointer).
using TowerPtr = std::shared_ptr<const FieldTower>;

// An element of a tower: a plain rational, or a reduced polynomial in the
// top generator with coefficients one level down.  Canonical form: reduced
// modulo the defining polynomial with trailing zero coefficients stripped,
// so equality of representations is equality of elements.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int v) : q_(v) {}
  FieldElement(const mpq_class& v) : q_(v) {}
  static FieldElement from_coeffs(TowerPtr t, std::vector<FieldElement> c);
  static FieldElement generator(const TowerPtr& t);

  const TowerPtr& tower() const { return tower_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational() const;  // throws FieldMismatch if not rational
  // coefficients over the base tower (only when tower() is non-null)
  const std::vector<FieldElement>& coeffs() const { return c_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const;  // arbitrary stable order

  FieldElement inverse() const;
  std::string to_string() const;

 private:
  TowerPtr tower_;               // null: plain rational
  mpq_class q_ = 0;              // value when tower_ is null
  std::vector<FieldElement> c_;  // coefficients over tower_->base()
  void normalize();
  friend class FieldTower;
};

// One extension layer: base(alpha) with a monic irreducible defining
// polynomial over the base.  Towers are immutable and shared.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  static TowerPtr extend(TowerPtr base, std::string generator,
                         std::vector<FieldElement> minpoly);

  const TowerPtr& base() const { return base_; }
  const std::string& generator() const { return gen_; }
  const std::vector<FieldElement>& minpoly() const { return minpoly_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  int height() const { return height_; }

 private:
  FieldTower() = default;
  TowerPtr base_;
  std::string gen_;
  std::vector<FieldElement> minpoly_;
  int height_ = 0;
};

int tower_height(const TowerPtr& t);
bool same_tower(const TowerPtr& a, const TowerPtr& b);
// Re-express an element in a taller tower that has the element's own tower
// in its base chain.
FieldElement lift_to(const FieldElement& e, const TowerPtr& t);

// ---------------------------------------------------------------------------
// Univariate polynomials with tower coefficients (coefficient vectors, low
// to high, trailing zeros stripped).
// ---------------------------------------------------------------------------

using TPoly = std::vector<FieldElement>;

TPoly tp_normalize(TPoly p);
int tp_degree(const TPoly& p);  // -1 for zero
TPoly tp_add(const TPoly& a, const TPoly& b);
TPoly tp_sub(const TPoly& a, const TPoly& b);
TPoly tp_mul(const TPoly& a, const TPoly& b);
std::pair<TPoly, TPoly> tp_divmod(const TPoly& a, const TPoly& b);
TPoly tp_gcd(const TPoly& a, const TPoly& b);  // monic
TPoly tp_derivative(const TPoly& a);
TPoly tp_monic(const TPoly& a);
FieldElement tp_eval(const TPoly& a, const FieldElement& x);
std::string tp_to_string(const TPoly& a, const std::string& var);

struct TowerFactor {
  TPoly poly;  // monic irreducible over the coefficient tower
  int multiplicity = 1;
};

// Complete factorization over the coefficient tower.  Height 0 uses the
// rational factorizer; height 1 uses norm descent; higher towers throw
// UnsupportedAlgebra.
std::vector<TowerFactor> factor_over(const TowerPtr& tower, const TPoly& p);

bool is_irreducible_over(const TowerPtr& tower, const TPoly& p);

struct AdjoinResult {
  TowerPtr tower;     // the input tower, or a one-layer extension
  FieldElement root;  // a root of the given polynomial in `tower`
};

// A root of p: degree 1 solves in place; an irreducible higher-degree p
// extends the tower by one layer (throwing TowerHeightExceeded past
// max_height).  A reducible p throws Reducible with the factors listed in
// the message; callers that want to branch should use factor_over first.
AdjoinResult adjoin_root(const TowerPtr& tower, const TPoly& p,
                         const std::string& generator, int max_height = 2);

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over a tower.  Indeterminates are global
// indices (the caller keeps the index -> name map); exponent keys are
// trimmed so polynomials over different variable prefixes mix freely.
// ---------------------------------------------------------------------------

class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly constant(const FieldElement& c);
  static MultiPoly variable(int index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;  // zero polynomial -> 0
  std::vector<int> vars_used() const;
  int degree_in(int var) const;
  // the coefficient of var^k, as a polynomial in the remaining variables
  MultiPoly coeff_of(int var, int k) const;
  // nonzero only when the polynomial involves no variable except `var`
  bool univariate_in(int var, TPoly* out) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const FieldElement& s) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly substitute(int var, const FieldElement& value) const;
  MultiPoly substitute(int var, const MultiPoly& value) const;
  MultiPoly map_coeffs(const TowerPtr& t) const;  // lift into a taller tower

  const std::map<std::vector<int>, FieldElement>& terms() const {
    return terms_;
  }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<std::vector<int>, FieldElement> terms_;
  void add_term(std::vector<int> e, const FieldElement& c);
};

using ExactMatrix = Matrix<MultiPoly>;

MultiPoly poly_determinant(const ExactMatrix& m);

// All k x k minors, rows and columns each in lexicographic tuple order,
// row tuples outermost.
std::vector<MultiPoly> minors_k(const ExactMatrix& m, int k);

// Rank of a matrix of constants (every entry must be variable-free).
int constant_rank(const ExactMatrix& m);

}  // namespace pa
