#include "pa/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "pa/errors.hpp"

namespace pa {

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  strip();
}

UniPoly UniPoly::constant(const mpq_class& a) { return UniPoly({a}); }

UniPoly UniPoly::variable() { return UniPoly({0, 1}); }

void UniPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& UniPoly::operator[](int i) const {
  static const mpq_class zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const mpq_class& UniPoly::leading() const {
  if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const mpq_class& s) const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  std::vector<mpq_class> quo;
  int dd = d.degree();
  if (degree() >= dd) quo.assign(degree() - dd + 1, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    mpq_class q = rem[i] / d.c_[dd];
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::derivative() const {
  std::vector<mpq_class> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * mpq_class(i));
  return UniPoly(std::move(r));
}

mpq_class UniPoly::evaluate(const mpq_class& a) const {
  mpq_class v = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) v = v * a + c_[i];
  return v;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (mpq_class(1) / leading());
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    mpq_class a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    if (first && a < 0) os << "-";
    mpq_class mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a, g = b;
  while (!g.is_zero()) {
    UniPoly r = f.divmod(g).second;
    f = g;
    g = r.monic();
  }
  return f.monic();
}

mpq_class resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  int df = f.degree(), dg = g.degree();
  if (dg == 0) {
    mpq_class v = 1;
    for (int i = 0; i < df; ++i) v *= g.leading();
    return v;
  }
  if (df < dg) {
    mpq_class sign = (df * dg) % 2 ? -1 : 1;
    return sign * resultant(g, f);
  }
  UniPoly r = f.divmod(g).second;
  if (r.is_zero()) return dg == 0 ? mpq_class(1) : mpq_class(0);
  mpq_class lcg_pow = 1;
  for (int i = 0; i < df - r.degree(); ++i) lcg_pow *= g.leading();
  mpq_class sign = (df * dg) % 2 ? -1 : 1;
  return sign * lcg_pow * resultant(g, r);
}

mpq_class discriminant(const UniPoly& p) {
  int d = p.degree();
  if (d < 2) throw Error("discriminant requires degree >= 2");
  mpq_class res = resultant(p, p.derivative());
  mpq_class sign = (d * (d - 1) / 2) % 2 ? -1 : 1;
  return sign * res / p.leading();
}

bool is_rational_square(const mpq_class& q) {
  if (q < 0) return false;
  mpq_class r = q;
  r.canonicalize();
  return mpz_perfect_square_p(r.get_num_mpz_t()) &&
         mpz_perfect_square_p(r.get_den_mpz_t());
}

// ---------------------------------------------------------------------------
// Factorization over Q.
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<mpz_class>;  // low to high, trailing zeros stripped

void zstrip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
  zstrip(r);
  return r;
}

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (auto& x : r) x = ((x % m) + m) % m;
  zstrip(r);
  return r;
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (auto& x : r) x = ((x % m) + m) % m;
  zstrip(r);
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error("modular inverse does not exist");
  return r;
}

// Division a = q*b + r mod m; the divisor's leading coefficient must be a
// unit mod m.
std::pair<ZPoly, ZPoly> zdivmod_mod(const ZPoly& a, const ZPoly& b,
                                    const mpz_class& m) {
  if (b.empty()) throw Error("modular polynomial division by zero");
  ZPoly rem = a, quo;
  int db = static_cast<int>(b.size()) - 1;
  mpz_class lcinv = inv_mod(b.back(), m);
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - db, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    mpz_class q = (rem[i] * lcinv) % m;
    if (q == 0) continue;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = ((rem[i - db + j] - q * b[j]) % m + m) % m;
  }
  zstrip(rem);
  zstrip(quo);
  return {quo, rem};
}

ZPoly zgcd_mod(ZPoly a, ZPoly b, const mpz_class& p) {
  while (!b.empty()) {
    ZPoly r = zdivmod_mod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpz_class inv = inv_mod(a.back(), p);
    for (auto& x : a) x = (x * inv) % p;
  }
  return a;
}

// Extended Euclid mod a prime: s*a + t*b = 1 (a, b coprime mod p).
void bezout_mod(const ZPoly& a, const ZPoly& b, const mpz_class& p, ZPoly& s,
                ZPoly& t) {
  ZPoly r0 = a, r1 = b;
  ZPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = zdivmod_mod(r0, r1, p);
    ZPoly s2 = zsub_mod(s0, zmul_mod(q, s1, p), p);
    ZPoly t2 = zsub_mod(t0, zmul_mod(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error("bezout: arguments are not coprime");
  mpz_class inv = inv_mod(r0[0], p);
  for (auto& x : s0) x = (x * inv) % p;
  for (auto& x : t0) x = (x * inv) % p;
  s = std::move(s0);
  t = std::move(t0);
}

ZPoly zderivative(const ZPoly& a) {
  ZPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * mpz_class(i));
  zstrip(r);
  return r;
}

ZPoly zreduce(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  for (auto& x : r) x = ((x % m) + m) % m;
  zstrip(r);
  return r;
}

// Berlekamp factorization of a monic square-free polynomial mod a prime p.
std::vector<ZPoly> berlekamp(const ZPoly& f, const mpz_class& p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 1) return {f};
  // rows of Q - I: x^{ip} mod f, as columns indexed by monomial degree
  std::vector<std::vector<mpz_class>> M(d, std::vector<mpz_class>(d, 0));
  ZPoly xp = {1};  // x^{ip} accumulated
  // x^p mod f by square and multiply
  ZPoly base = {0, 1}, acc = {1};
  mpz_class e = p;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      acc = zdivmod_mod(zmul_mod(acc, base, p), f, p).second;
    base = zdivmod_mod(zmul_mod(base, base, p), f, p).second;
    e >>= 1;
  }
  const ZPoly xpowp = acc;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < static_cast<int>(xp.size()); ++j) M[j][i] = xp[j];
    M[i][i] = ((M[i][i] - 1) % p + p) % p;
    xp = zdivmod_mod(zmul_mod(xp, xpowp, p), f, p).second;
  }
  // kernel of M (column vectors v with M v = 0) by Gaussian elimination
  std::vector<int> pivot_col(d, -1);
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int piv = -1;
    for (int r = rank; r < d; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    mpz_class inv = inv_mod(M[rank][col], p);
    for (int c = 0; c < d; ++c) M[rank][c] = (M[rank][c] * inv) % p;
    for (int r = 0; r < d; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      mpz_class s = M[r][col];
      for (int c = 0; c < d; ++c)
        M[r][c] = ((M[r][c] - s * M[rank][c]) % p + p) % p;
    }
    pivot_col[rank++] = col;
  }
  std::vector<ZPoly> kernel;
  std::vector<char> is_pivot(d, 0);
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = 1;
  for (int col = 0; col < d; ++col) {
    if (is_pivot[col]) continue;
    ZPoly v(d, 0);
    v[col] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = ((-M[r][col]) % p + p) % p;
    zstrip(v);
    kernel.push_back(std::move(v));
  }
  const size_t nfactors = kernel.size();
  std::vector<ZPoly> factors = {f};
  for (const auto& v : kernel) {
    if (factors.size() == nfactors) break;
    if (v.size() == 1) continue;  // the constant kernel vector cannot split
    std::vector<ZPoly> next;
    for (const auto& g : factors) {
      if (static_cast<int>(g.size()) - 1 <= 1) {
        next.push_back(g);
        continue;
      }
      ZPoly rest = g;
      for (mpz_class s = 0; s < p && rest.size() > 1; ++s) {
        ZPoly vs = v;
        if (vs.empty()) vs = {0};
        vs[0] = ((vs[0] - s) % p + p) % p;
        zstrip(vs);
        ZPoly h = zgcd_mod(rest, vs, p);
        if (h.size() > 1 && h.size() < rest.size()) {
          next.push_back(h);
          rest = zdivmod_mod(rest, h, p).first;
        }
      }
      if (!rest.empty() && rest.size() > 1) next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
// to the same congruences mod m^2 (f monic, g monic, h monic).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                 const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = zsub_mod(f, zmul_mod(g, h, m2), m2);
  auto [q, r] = zdivmod_mod(zmul_mod(s, e, m2), h, m2);
  ZPoly g1 = zadd_mod(g, zadd_mod(zmul_mod(t, e, m2), zmul_mod(q, g, m2), m2), m2);
  ZPoly h1 = zadd_mod(h, r, m2);
  ZPoly b = zsub_mod(
      zadd_mod(zmul_mod(s, g1, m2), zmul_mod(t, h1, m2), m2), ZPoly{1}, m2);
  auto [c, d2] = zdivmod_mod(zmul_mod(s, b, m2), h1, m2);
  ZPoly s1 = zsub_mod(s, d2, m2);
  ZPoly t1 = zsub_mod(
      t, zadd_mod(zmul_mod(t, b, m2), zmul_mod(c, g1, m2), m2), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lift a modular factorization of monic f from mod p to mod P (a power of
// p at least as large as the requested bound), by a balanced factor tree.
void hensel_tree(const ZPoly& f, const std::vector<ZPoly>& modular,
                 size_t lo, size_t hi, const mpz_class& p, const mpz_class& P,
                 std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zreduce(f, P));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  ZPoly g = {1}, h = {1};
  for (size_t i = lo; i < mid; ++i) g = zmul_mod(g, modular[i], p);
  for (size_t i = mid; i < hi; ++i) h = zmul_mod(h, modular[i], p);
  ZPoly s, t;
  bezout_mod(g, h, p, s, t);
  mpz_class m = p;
  ZPoly fg = g, fh = h;
  while (m < P) {
    hensel_step(zreduce(f, m * m), fg, fh, s, t, m);
    m *= m;
  }
  fg = zreduce(fg, P);
  fh = zreduce(fh, P);
  hensel_tree(fg, modular, lo, mid, p, P, out);
  hensel_tree(fh, modular, mid, hi, p, P, out);
}

mpz_class symmetric_rep(const mpz_class& a, const mpz_class& m) {
  mpz_class r = ((a % m) + m) % m;
  if (2 * r > m) r -= m;
  return r;
}

// Exact division test over Z for monic divisor; returns the quotient or an
// empty optional-like flag via the bool.
bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  ZPoly rem = f, quo;
  int dg = static_cast<int>(g.size()) - 1;
  if (static_cast<int>(rem.size()) - 1 < dg) return false;
  quo.assign(rem.size() - dg, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
    mpz_class q = rem[i];  // g is monic
    quo[i - dg] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g[j];
  }
  zstrip(rem);
  if (!rem.empty()) return false;
  zstrip(quo);
  quotient = std::move(quo);
  return true;
}

// Factor a monic square-free integer polynomial into monic irreducible
// integer polynomials.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 1) return {f};
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  mpz_class p = 0;
  for (long cand : primes) {
    mpz_class pc = cand;
    ZPoly fp = zreduce(f, pc);
    if (static_cast<int>(fp.size()) - 1 != d) continue;  // lc vanished (monic: impossible)
    ZPoly g = zgcd_mod(fp, zreduce(zderivative(f), pc), pc);
    if (g.size() == 1) {
      p = pc;
      break;
    }
  }
  if (p == 0) throw Error("factorization: no suitable prime found");

  std::vector<ZPoly> modular = berlekamp(zreduce(f, p), p);
  if (modular.size() == 1) return {f};

  // coefficient bound for any monic factor (Mignotte)
  mpz_class norm2 = 0;
  for (const auto& a : f) norm2 += a * a;
  mpz_class bound = 1;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  for (int i = 0; i < d; ++i) bound *= 2;
  mpz_class P = p;
  while (P <= 2 * bound) P *= p;

  std::vector<ZPoly> lifted;
  hensel_tree(zreduce(f, P), modular, 0, modular.size(), p, P, lifted);

  // exhaustive recombination over subsets of the lifted factors
  std::vector<ZPoly> result;
  std::vector<ZPoly> pool = lifted;
  ZPoly remaining = f;
  bool progress = true;
  while (pool.size() > 0 && progress) {
    progress = false;
    size_t r = pool.size();
    for (size_t card = 1; card <= r / 2 && !progress; ++card) {
      std::vector<size_t> idx(card);
      for (size_t i = 0; i < card; ++i) idx[i] = i;
      while (true) {
        ZPoly prod = {1};
        for (size_t i : idx) prod = zmul_mod(prod, pool[i], P);
        for (auto& a : prod) a = symmetric_rep(a, P);
        zstrip(prod);
        ZPoly quo;
        if (!prod.empty() && prod.back() == 1 &&
            zdivides(remaining, prod, quo)) {
          result.push_back(prod);
          remaining = std::move(quo);
          std::vector<ZPoly> keep;
          for (size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            keep.push_back(pool[i]);
          }
          pool = std::move(keep);
          progress = true;
          break;
        }
        // next combination
        int pos = static_cast<int>(card) - 1;
        while (pos >= 0 && idx[pos] == r - card + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  if (remaining.size() > 1) result.push_back(remaining);
  return result;
}

UniPoly zpoly_to_uni(const ZPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& a : p) c.emplace_back(a);
  return UniPoly(std::move(c));
}

// Factor a square-free polynomial over Q into monic irreducibles.
std::vector<UniPoly> factor_squarefree_over_Q(const UniPoly& p) {
  int d = p.degree();
  if (d <= 0) return {};
  if (d == 1) return {p.monic()};
  // clear denominators to a primitive integer polynomial
  mpz_class den = 1;
  for (const auto& a : p.coeffs()) {
    mpq_class q = a;
    q.canonicalize();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    den = den / g * q.get_den();
  }
  ZPoly zi;
  for (const auto& a : p.coeffs()) {
    mpq_class v = a * mpq_class(den);
    v.canonicalize();
    zi.push_back(v.get_num());
  }
  mpz_class content = 0;
  for (const auto& a : zi) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                                   a.get_mpz_t());
  for (auto& a : zi) a /= content;
  if (zi.back() < 0)
    for (auto& a : zi) a = -a;
  // make monic: g(x) = l^{d-1} f(x/l) has integer coefficients
  mpz_class l = zi.back();
  ZPoly monic_f(zi.size());
  monic_f[d] = 1;
  mpz_class pw = 1;
  for (int i = d - 1; i >= 0; --i) {
    monic_f[i] = zi[i] * pw;
    pw *= l;
  }
  std::vector<UniPoly> out;
  for (const auto& h : factor_monic_squarefree(monic_f)) {
    // undo the substitution: h(l x), then take the monic form over Q
    std::vector<mpq_class> c(h.size());
    mpq_class lp = 1;
    for (size_t i = 0; i < h.size(); ++i) {
      c[i] = mpq_class(h[i]) * lp;
      lp *= l;
    }
    out.push_back(UniPoly(std::move(c)).monic());
  }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

}  // namespace

std::vector<Factor> factor_rationals(const UniPoly& p) {
  if (p.is_zero()) throw Error("cannot factor the zero polynomial");
  std::vector<Factor> out;
  UniPoly f = p.monic();
  // square-free decomposition by repeated gcd (characteristic zero)
  UniPoly g = gcd(f, f.derivative());
  UniPoly w = f.divmod(g).first.monic();
  int mult = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, g);
    UniPoly z = w.divmod(y).first.monic();
    if (z.degree() > 0)
      for (const auto& irr : factor_squarefree_over_Q(z))
        out.push_back({irr, mult});
    w = y;
    if (!g.is_zero() && g.degree() > 0) g = g.divmod(y).first.monic();
    ++mult;
  }
  return out;
}

bool is_irreducible_over_Q(const UniPoly& p) {
  if (p.degree() <= 0) return false;
  auto fs = factor_rationals(p);
  return fs.size() == 1 && fs[0].multiplicity == 1 &&
         fs[0].poly.degree() == p.degree();
}

}  // namespace pa
