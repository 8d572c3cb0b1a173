#include "pa/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "pa/errors.hpp"

namespace pa {

// ---------------------------------------------------------------------------
// Towers.
// ---------------------------------------------------------------------------

int tower_height(const TowerPtr& t) { return t ? t->height() : 0; }

bool same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->generator() != b->generator()) return false;
  if (!(a->minpoly().size() == b->minpoly().size())) return false;
  for (size_t i = 0; i < a->minpoly().size(); ++i)
    if (!(a->minpoly()[i] == b->minpoly()[i])) return false;
  return same_tower(a->base(), b->base());
}

namespace {

bool is_ancestor(const TowerPtr& anc, TowerPtr t) {
  while (true) {
    if (same_tower(anc, t)) return true;
    if (!t) return false;
    t = t->base();
  }
}

}  // namespace

TowerPtr FieldTower::extend(TowerPtr base, std::string generator,
                            std::vector<FieldElement> minpoly) {
  while (!minpoly.empty() && minpoly.back().is_zero()) minpoly.pop_back();
  if (minpoly.size() < 3)
    throw Error("FieldTower: defining polynomial must have degree >= 2");
  if (!(minpoly.back() == FieldElement(1)))
    throw Error("FieldTower: defining polynomial must be monic");
  for (auto& c : minpoly) c = lift_to(c, base);
  auto t = std::shared_ptr<FieldTower>(new FieldTower());
  t->base_ = std::move(base);
  t->gen_ = std::move(generator);
  t->minpoly_ = std::move(minpoly);
  t->height_ = tower_height(t->base_) + 1;
  return t;
}

FieldElement lift_to(const FieldElement& e, const TowerPtr& t) {
  if (same_tower(e.tower(), t)) return e;
  if (!t) {
    if (e.is_rational()) return e;
    throw FieldMismatch("cannot express an algebraic element rationally");
  }
  FieldElement lower = lift_to(e, t->base());
  FieldElement out;
  out = FieldElement::from_coeffs(t, {lower});
  return out;
}

// ---------------------------------------------------------------------------
// Field elements.
// ---------------------------------------------------------------------------

void FieldElement::normalize() {
  if (!tower_) return;
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  const int d = tower_->degree();
  while (static_cast<int>(c_.size()) > d) {
    FieldElement top = c_.back();
    c_.pop_back();
    const size_t s = c_.size();
    for (int j = 0; j < d; ++j)
      c_[s - d + j] = c_[s - d + j] - top * tower_->minpoly()[j];
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  if (c_.size() <= 1) {
    FieldElement inner = c_.empty() ? FieldElement(0) : c_[0];
    *this = inner;
  }
}

FieldElement FieldElement::from_coeffs(TowerPtr t, std::vector<FieldElement> c) {
  if (!t) throw FieldMismatch("from_coeffs needs an extension tower");
  FieldElement e;
  e.tower_ = std::move(t);
  e.c_ = std::move(c);
  for (auto& x : e.c_) x = lift_to(x, e.tower_->base());
  e.normalize();
  return e;
}

FieldElement FieldElement::generator(const TowerPtr& t) {
  return from_coeffs(t, {FieldElement(0), FieldElement(1)});
}

bool FieldElement::is_zero() const { return !tower_ && q_ == 0; }

bool FieldElement::is_rational() const { return !tower_; }

mpq_class FieldElement::rational() const {
  if (tower_) throw FieldMismatch("element is not rational");
  return q_;
}

namespace {

// Put two elements over one tower: the taller of the two (or either when
// they agree); incomparable towers are a usage error.
TowerPtr common_tower(const FieldElement& a, const FieldElement& b) {
  if (same_tower(a.tower(), b.tower())) return a.tower();
  if (is_ancestor(a.tower(), b.tower())) return b.tower();
  if (is_ancestor(b.tower(), a.tower())) return a.tower();
  throw FieldMismatch("elements of unrelated field towers");
}

std::vector<FieldElement> coeff_vec(const FieldElement& e, const TowerPtr& t) {
  FieldElement l = lift_to(e, t);
  if (!t) return {l};
  if (l.tower() && same_tower(l.tower(), t)) return l.coeffs();
  return {l};  // element lies in the base; a constant polynomial
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  TowerPtr t = common_tower(*this, o);
  if (!t) return FieldElement(q_ + o.q_);
  std::vector<FieldElement> a = coeff_vec(*this, t), b = coeff_vec(o, t);
  std::vector<FieldElement> r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return from_coeffs(t, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator-() const {
  if (!tower_) return FieldElement(mpq_class(-q_));
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = -x;
  return from_coeffs(tower_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  TowerPtr t = common_tower(*this, o);
  if (!t) return FieldElement(q_ * o.q_);
  std::vector<FieldElement> a = coeff_vec(*this, t), b = coeff_vec(o, t);
  std::vector<FieldElement> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return from_coeffs(t, std::move(r));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (!tower_) {
    if (q_ == 0) throw Error("division by zero");
    return FieldElement(mpq_class(1 / q_));
  }
  // extended Euclid of this (as a polynomial in the generator) with the
  // defining polynomial, over the base tower
  TPoly r0 = tower_->minpoly(), r1 = c_;
  TPoly s0 = {}, s1 = {FieldElement(1)};  // coefficients of the element
  while (tp_degree(r1) > 0) {
    auto [q, r2] = tp_divmod(r0, r1);
    TPoly s2 = tp_sub(s0, tp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (tp_degree(r1) < 0) throw Error("inverse: element and minpoly share a factor");
  FieldElement scale = r1[0].inverse();
  TPoly s = s1;
  for (auto& x : s) x = x * scale;
  return from_coeffs(tower_, std::move(s));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!tower_ && !o.tower_) return q_ == o.q_;
  if (!same_tower(tower_, o.tower_)) {
    // canonical forms collapse to the lowest possible level, so elements of
    // one tower equal elements of a strictly taller one only via lifting
    if (is_ancestor(tower_, o.tower_) || is_ancestor(o.tower_, tower_))
      return (*this - o).is_zero();
    return false;
  }
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

bool FieldElement::operator<(const FieldElement& o) const {
  int ha = tower_height(tower_), hb = tower_height(o.tower_);
  if (ha != hb) return ha < hb;
  if (!tower_) return q_ < o.q_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == o.c_[i]) continue;
    return c_[i] < o.c_[i];
  }
  return false;
}

std::string FieldElement::to_string() const {
  if (!tower_) return q_.get_str();
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    std::string cs = c_[i].to_string();
    bool needs_paren = !c_[i].is_rational() || (i > 0 && cs != "1");
    if (i == 0) {
      os << (c_[i].is_rational() ? cs : "(" + cs + ")");
    } else {
      if (cs != "1") os << (needs_paren && !c_[i].is_rational()
                                ? "(" + cs + ")"
                                : cs)
                        << "*";
      os << tower_->generator();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomials with tower coefficients.
// ---------------------------------------------------------------------------

TPoly tp_normalize(TPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int tp_degree(const TPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d].is_zero()) --d;
  return d;
}

TPoly tp_add(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return tp_normalize(std::move(r));
}

TPoly tp_sub(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  return tp_normalize(std::move(r));
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return tp_normalize(std::move(r));
}

std::pair<TPoly, TPoly> tp_divmod(const TPoly& a, const TPoly& b) {
  TPoly rem = tp_normalize(a), div = tp_normalize(b);
  if (div.empty()) throw Error("polynomial division by zero");
  int db = static_cast<int>(div.size()) - 1;
  TPoly quo;
  if (static_cast<int>(rem.size()) - 1 >= db) quo.resize(rem.size() - db);
  FieldElement lcinv = div.back().inverse();
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    FieldElement q = rem[i] * lcinv;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = rem[i - db + j] - q * div[j];
  }
  return {tp_normalize(std::move(quo)), tp_normalize(std::move(rem))};
}

TPoly tp_monic(const TPoly& a) {
  TPoly p = tp_normalize(a);
  if (p.empty()) return p;
  FieldElement inv = p.back().inverse();
  for (auto& x : p) x = x * inv;
  return p;
}

TPoly tp_gcd(const TPoly& a, const TPoly& b) {
  TPoly f = tp_normalize(a), g = tp_normalize(b);
  while (!g.empty()) {
    TPoly r = tp_divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return tp_monic(f);
}

TPoly tp_derivative(const TPoly& a) {
  TPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * FieldElement(static_cast<int>(i)));
  return tp_normalize(std::move(r));
}

FieldElement tp_eval(const TPoly& a, const FieldElement& x) {
  FieldElement v(0);
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * x + a[i];
  return v;
}

std::string tp_to_string(const TPoly& a, const std::string& var) {
  TPoly p = tp_normalize(a);
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i].is_zero()) continue;
    FieldElement c = p[i];
    if (c.is_rational()) {
      mpq_class q = c.rational();
      if (!first) {
        os << (q < 0 ? " - " : " + ");
        if (q < 0) q = -q;
      } else if (q < 0 && i > 0 && q == -1) {
        os << "-";
        q = 1;
      }
      mpq_class mag = q;
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i > 0) {
        if (mag != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.to_string() << ")";
      if (i > 0) {
        os << "*" << var;
        if (i > 1) os << "^" << i;
      }
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Factorization over towers.
// ---------------------------------------------------------------------------

namespace {

UniPoly tpoly_to_unipoly(const TPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& x : p) c.push_back(x.rational());
  return UniPoly(std::move(c));
}

TPoly unipoly_to_tpoly(const UniPoly& p) {
  TPoly c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return c;
}

// p(x + shift) by Horner composition.
TPoly tp_compose_shift(const TPoly& p, const FieldElement& shift) {
  TPoly lin = {shift, FieldElement(1)};
  TPoly out;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    out = tp_add(tp_mul(out, lin), TPoly{p[i]});
  return out;
}

// Determinant of a square matrix of rational univariate polynomials by
// fraction-free elimination (all divisions are exact).
UniPoly unipoly_determinant(std::vector<std::vector<UniPoly>> a) {
  const int s = static_cast<int>(a.size());
  if (s == 0) return UniPoly::constant(1);
  UniPoly prev = UniPoly::constant(1);
  int sign = 1;
  for (int k = 0; k + 1 < s; ++k) {
    if (a[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < s; ++i)
        if (!a[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return UniPoly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < s; ++i)
      for (int j = k + 1; j < s; ++j) {
        UniPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto [q, r] = num.divmod(prev);
        if (!r.is_zero()) throw Error("fraction-free elimination: inexact step");
        a[i][j] = std::move(q);
      }
    prev = a[k][k];
  }
  return sign == 1 ? a[s - 1][s - 1] : a[s - 1][s - 1] * mpq_class(-1);
}

// Resultant in y of A(y) (rational coefficients) and B(x, y), eliminating y;
// both are given as polynomials in y whose coefficients live in Q[x].
UniPoly resultant_in_y(const std::vector<UniPoly>& A,
                       const std::vector<UniPoly>& B) {
  int da = static_cast<int>(A.size()) - 1;
  int db = static_cast<int>(B.size()) - 1;
  while (da >= 0 && A[da].is_zero()) --da;
  while (db >= 0 && B[db].is_zero()) --db;
  if (da < 0 || db < 0) return UniPoly();
  if (db == 0) {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < da; ++i) r = r * B[0];
    return r;
  }
  const int s = da + db;
  std::vector<std::vector<UniPoly>> m(s, std::vector<UniPoly>(s, UniPoly()));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[r][r + j] = A[da - j];
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j) m[db + r][r + j] = B[db - j];
  return unipoly_determinant(std::move(m));
}

// Norm-descent factorization of a monic square-free polynomial over a
// height-one tower Q(alpha).
std::vector<TPoly> trager_factor(const TowerPtr& tower, const TPoly& f) {
  if (tp_degree(f) == 1) return {f};
  std::vector<UniPoly> M;  // the defining polynomial, rational coefficients
  for (const auto& c : tower->minpoly()) M.push_back(UniPoly::constant(c.rational()));
  const int dm = static_cast<int>(M.size()) - 1;

  for (int k = 0;; ++k) {
    if (k > 60) throw Error("norm descent: no square-free shift found");
    FieldElement alpha = FieldElement::generator(tower);
    TPoly fk = tp_compose_shift(f, -(alpha * FieldElement(k)));
    // rewrite with the generator replaced by a fresh variable y:
    // B[j] = (coefficient of y^j) in Q[x]
    std::vector<std::vector<mpq_class>> b(dm);  // b[j][i] = coeff of x^i y^j
    int dx = static_cast<int>(fk.size()) - 1;
    for (auto& row : b) row.assign(dx + 1, 0);
    for (int i = 0; i <= dx; ++i) {
      const FieldElement& c = fk[i];
      if (c.is_rational()) {
        b[0][i] = c.rational();
      } else {
        const auto& cc = c.coeffs();
        for (size_t j = 0; j < cc.size(); ++j) b[j][i] = cc[j].rational();
      }
    }
    std::vector<UniPoly> B;
    for (int j = 0; j < dm; ++j) B.push_back(UniPoly(b[j]));
    UniPoly norm = resultant_in_y(M, B);
    if (norm.degree() != dm * tp_degree(f)) continue;  // degenerate shift
    if (gcd(norm, norm.derivative()).degree() != 0) continue;

    auto rational_factors = factor_rationals(norm);
    if (rational_factors.size() == 1)
      return {f};  // an irreducible norm certifies irreducibility
    std::vector<TPoly> out;
    FieldElement shift = alpha * FieldElement(k);
    for (const auto& nf : rational_factors) {
      TPoly g = tp_gcd(fk, unipoly_to_tpoly(nf.poly));
      if (tp_degree(g) <= 0) continue;
      out.push_back(tp_monic(tp_compose_shift(g, shift)));
    }
    int total = 0;
    for (const auto& g : out) total += tp_degree(g);
    if (total != tp_degree(f))
      throw Error("norm descent: factors do not recompose");
    return out;
  }
}

}  // namespace

std::vector<TowerFactor> factor_over(const TowerPtr& tower, const TPoly& p) {
  TPoly f = tp_monic(p);
  if (f.empty()) throw Error("cannot factor the zero polynomial");
  if (tp_degree(f) == 0) return {};
  if (tower_height(tower) >= 2)
    throw UnsupportedAlgebra(
        "factorization over a tower of height 2 or more is not supported");

  if (!tower) {
    std::vector<TowerFactor> out;
    for (const auto& fac : factor_rationals(tpoly_to_unipoly(f)))
      out.push_back({unipoly_to_tpoly(fac.poly), fac.multiplicity});
    return out;
  }

  // square-free decomposition over the tower, then norm descent per part
  std::vector<TowerFactor> out;
  TPoly g = tp_gcd(f, tp_derivative(f));
  TPoly w = tp_monic(tp_divmod(f, g).first);
  int mult = 1;
  while (tp_degree(w) > 0) {
    TPoly y = tp_gcd(w, g);
    TPoly z = tp_monic(tp_divmod(w, y).first);
    if (tp_degree(z) > 0)
      for (const auto& irr : trager_factor(tower, z)) out.push_back({irr, mult});
    w = std::move(y);
    if (tp_degree(g) > 0) g = tp_monic(tp_divmod(g, w).first);
    ++mult;
  }
  return out;
}

bool is_irreducible_over(const TowerPtr& tower, const TPoly& p) {
  if (tp_degree(p) <= 0) return false;
  auto fs = factor_over(tower, p);
  return fs.size() == 1 && fs[0].multiplicity == 1 &&
         tp_degree(fs[0].poly) == tp_degree(p);
}

AdjoinResult adjoin_root(const TowerPtr& tower, const TPoly& p,
                         const std::string& generator, int max_height) {
  TPoly f = tp_normalize(p);
  int d = tp_degree(f);
  if (d <= 0) throw Error("adjoin_root: polynomial must have positive degree");
  if (d == 1) return {tower, -(f[0] / f[1])};
  if (tower_height(tower) >= 2 && tower_height(tower) + 1 > max_height)
    throw TowerHeightExceeded("adjoining a root would exceed the tower height cap");

  auto factors = factor_over(tower, f);
  if (factors.size() != 1) {
    std::ostringstream os;
    os << "polynomial splits over the current field:";
    for (const auto& fac : factors)
      os << " (" << tp_to_string(fac.poly, "x") << ")^" << fac.multiplicity;
    throw Reducible(os.str());
  }
  const TPoly& irr = factors[0].poly;
  if (tp_degree(irr) == 1) return {tower, -(irr[0] / irr[1])};
  if (tower_height(tower) + 1 > max_height)
    throw TowerHeightExceeded("adjoining a root would exceed the tower height cap");
  TowerPtr extended = FieldTower::extend(tower, generator, irr);
  return {extended, FieldElement::generator(extended)};
}

// ---------------------------------------------------------------------------
// Multivariate polynomials.
// ---------------------------------------------------------------------------

namespace {

void trim_key(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

void MultiPoly::add_term(std::vector<int> e, const FieldElement& c) {
  if (c.is_zero()) return;
  trim_key(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(const FieldElement& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(int index) {
  MultiPoly p;
  std::vector<int> e(index + 1, 0);
  e[index] = 1;
  p.add_term(std::move(e), FieldElement(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

FieldElement MultiPoly::constant_value() const {
  if (terms_.empty()) return FieldElement(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

std::vector<int> MultiPoly::vars_used() const {
  std::vector<int> out;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 &&
          std::find(out.begin(), out.end(), static_cast<int>(i)) == out.end())
        out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end());
  return out;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    if (var < static_cast<int>(e.size())) d = std::max(d, e[var]);
  return d;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    int have = var < static_cast<int>(e.size()) ? e[var] : 0;
    if (have != k) continue;
    std::vector<int> rest = e;
    if (var < static_cast<int>(rest.size())) rest[var] = 0;
    out.add_term(std::move(rest), c);
  }
  return out;
}

bool MultiPoly::univariate_in(int var, TPoly* out) const {
  int deg = degree_in(var);
  TPoly p(deg + 1, FieldElement(0));
  for (const auto& [e, c] : terms_) {
    int pow = -1;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (static_cast<int>(i) != var) return false;
      pow = e[i];
    }
    p[pow < 0 ? 0 : pow] = p[pow < 0 ? 0 : pow] + c;
  }
  if (out) *out = tp_normalize(std::move(p));
  return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(std::max(e1.size(), e2.size()), 0);
      for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
      for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
      r.add_term(std::move(e), c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const FieldElement& s) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

MultiPoly MultiPoly::substitute(int var, const FieldElement& value) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int pow = var < static_cast<int>(e.size()) ? e[var] : 0;
    FieldElement f = c;
    for (int i = 0; i < pow; ++i) f = f * value;
    std::vector<int> rest = e;
    if (var < static_cast<int>(rest.size())) rest[var] = 0;
    r.add_term(std::move(rest), f);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  int top = degree_in(var);
  std::vector<MultiPoly> powers(top + 1);
  powers[0] = MultiPoly::constant(FieldElement(1));
  for (int i = 1; i <= top; ++i) powers[i] = powers[i - 1] * value;
  MultiPoly r;
  for (int k = 0; k <= top; ++k) {
    MultiPoly ck = coeff_of(var, k);
    if (ck.is_zero()) continue;
    r = r + ck * powers[k];
  }
  return r;
}

MultiPoly MultiPoly::map_coeffs(const TowerPtr& t) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, lift_to(c, t));
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    std::string cs = c.to_string();
    bool unit = (cs == "1") && !e.empty();
    if (!unit) os << (c.is_rational() ? cs : "(" + cs + ")");
    bool any = !unit ? false : true;
    bool printed_coeff = !unit;
    bool star_needed = printed_coeff;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star_needed) os << "*";
      os << (i < names.size() ? names[i] : "t" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      star_needed = true;
      any = true;
    }
    (void)any;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrices of polynomials.
// ---------------------------------------------------------------------------

MultiPoly poly_determinant(const ExactMatrix& m) {
  const int s = static_cast<int>(m.size());
  if (s == 0) return MultiPoly::constant(FieldElement(1));
  if (s == 1) return m[0][0];
  // cofactor expansion along the first column, skipping zero entries
  MultiPoly det;
  for (int r = 0; r < s; ++r) {
    if (m[r][0].is_zero()) continue;
    ExactMatrix sub;
    sub.reserve(s - 1);
    for (int i = 0; i < s; ++i) {
      if (i == r) continue;
      sub.emplace_back(m[i].begin() + 1, m[i].end());
    }
    MultiPoly term = m[r][0] * poly_determinant(sub);
    det = (r % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

void lex_tuples(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::vector<MultiPoly> minors_k(const ExactMatrix& m, int k) {
  std::vector<MultiPoly> out;
  if (m.empty() || k <= 0) return out;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<int>> rsel, csel;
  lex_tuples(rows, k, rsel);
  lex_tuples(cols, k, csel);
  for (const auto& rs : rsel)
    for (const auto& cs : csel) {
      ExactMatrix sub(k, std::vector<MultiPoly>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
      out.push_back(poly_determinant(sub));
    }
  return out;
}

int constant_rank(const ExactMatrix& m) {
  Matrix<FieldElement> c(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (const auto& p : m[i]) {
      if (!p.is_constant())
        throw Error("constant_rank: matrix has indeterminate entries");
      c[i].push_back(p.constant_value());
    }
  return rank_of(c);
}

}  // namespace pa
