#include "pa/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "pa/errors.hpp"

namespace pa {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Complete: return "Complete";
    case SolveStatus::NotGeneric: return "NotGeneric";
    case SolveStatus::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case SolveStatus::EmptyByCriterion: return "EmptyByCriterion";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Skeleton vectors.
// ---------------------------------------------------------------------------

std::map<Position, std::vector<mpq_class>> skeleton_vectors(
    const std::vector<QFlag>& flags) {
  if (flags.empty()) throw DimensionMismatch("skeleton: no flags");
  const int n = flags[0].n();
  const int d = static_cast<int>(flags.size());
  for (const auto& f : flags) {
    validate_flag(f);
    if (f.n() != n) throw DimensionMismatch("skeleton: flags of different rank");
  }
  std::map<Position, std::vector<mpq_class>> out;
  const DotArray tarr = transverse_array(n, d);
  for (const auto& x : tarr.dots()) {
    std::vector<Matrix<mpq_class>> spans;
    for (int a = 0; a < d; ++a) spans.push_back(flags[a].prefix(x[a]));
    Matrix<mpq_class> basis = intersection_basis(spans, n);
    if (basis.size() != 1)
      throw DegenerateFlags("skeleton intersection at " + position_to_string(x) +
                            " has dimension " + std::to_string(basis.size()));
    std::vector<mpq_class> v = basis[0];
    // first nonzero coordinate 1, then clear denominators
    mpq_class lead = 0;
    for (const auto& c : v)
      if (c != 0) {
        lead = c;
        break;
      }
    mpz_class den = 1;
    for (auto& c : v) {
      c /= lead;
      c.canonicalize();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      den = den / g * c.get_den();
    }
    for (auto& c : v) c *= den;
    out[x] = std::move(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The branch-and-substitute engine.
// ---------------------------------------------------------------------------

namespace {

using Vec = std::vector<MultiPoly>;  // length n

// Aborts only the current branch of the search tree (it contributes no
// solutions), unlike NotGeneric which condemns the whole flag choice.
// Raised instead of NotGeneric inside speculative branches, i.e. those
// created from roots of resultant-derived (necessary but not sufficient)
// equations, where dead ends are expected.
struct BranchDead {
  std::string reason;
};

struct Branch {
  TowerPtr tower;
  bool speculative = false;
  std::map<Position, Vec> store;  // every dot ever given a vector
  // derived conditions (common factors, resultants) that could not be
  // resolved when first seen; kept substituted and revisited
  std::vector<MultiPoly> pending;
  // rank conditions deferred positionally: (level, region position).  Their
  // matrices are rebuilt from the current vectors when revisited, which
  // keeps them small no matter how many substitutions happened in between.
  std::vector<std::pair<int, Position>> deferred;
  // polynomials assumed nonzero on this branch (leading coefficients of
  // projective eliminations); stored with unit leading coefficient.  Their
  // powers are divided out of every later condition, since they enter
  // minors only as rescaling artifacts.
  std::vector<MultiPoly> excluded;
  long long mult = 1;
  std::vector<std::string> prov;
};

struct Ctx {
  int n = 0, d = 0;
  std::vector<DotArray> slices;       // P_1..P_n
  std::vector<RankTable> slice_rank;  // rank tables of the slices
  std::vector<Position> region;       // x with coordinate sum > (d-1)n
  std::vector<std::string> var_names;
  int extension_count = 0;
  SolveReport* report = nullptr;
};

[[noreturn]] void fail(bool speculative, const std::string& msg) {
  if (speculative) throw BranchDead{msg};
  throw NotGeneric(msg);
}

[[noreturn]] void fail(const Branch& b, const std::string& msg) {
  fail(b.speculative, msg);
}

bool trace_enabled() {
  static const bool on = std::getenv("PA_SOLVER_TRACE") != nullptr;
  return on;
}

int fresh_var(Ctx& ctx, int level) {
  int idx = static_cast<int>(ctx.var_names.size());
  ctx.var_names.push_back("c" + std::to_string(level) + "_" +
                          std::to_string(idx));
  return idx;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

bool vec_uses_var(const Vec& v, int var) {
  for (const auto& e : v)
    if (e.degree_in(var) > 0) return true;
  return false;
}

MultiPoly monomial(const std::vector<int>& exps, const FieldElement& c) {
  MultiPoly m = MultiPoly::constant(c);
  for (size_t i = 0; i < exps.size(); ++i)
    for (int k = 0; k < exps[i]; ++k)
      m = m * MultiPoly::variable(static_cast<int>(i));
  return m;
}

// Exact division: true and *q = p / a when a divides p.  Leading-term
// cancellation in the padded-lex monomial order always terminates.
bool try_exact_divide(const MultiPoly& p, const MultiPoly& a, MultiPoly* q) {
  if (a.is_zero()) return false;
  MultiPoly rem = p, quot;
  const auto& alead = *a.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    std::vector<int> diff(std::max(rlead.first.size(), alead.first.size()), 0);
    for (size_t i = 0; i < rlead.first.size(); ++i) diff[i] = rlead.first[i];
    for (size_t i = 0; i < alead.first.size(); ++i) {
      diff[i] -= alead.first[i];
      if (diff[i] < 0) return false;
    }
    MultiPoly t = monomial(diff, rlead.second / alead.second);
    quot = quot + t;
    rem = rem - t * a;
  }
  *q = quot;
  return true;
}

// divide out every power of every excluded factor
MultiPoly strip_excluded(const Branch& b, MultiPoly m) {
  if (m.is_zero()) return m;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& f : b.excluded) {
      if (f.is_constant()) continue;
      MultiPoly q;
      while (try_exact_divide(m, f, &q)) {
        m = q;
        progress = true;
        if (m.is_constant()) return m;
      }
    }
  }
  return m;
}

void add_excluded(Branch& b, const MultiPoly& a) {
  if (a.is_constant()) return;
  MultiPoly norm = a * a.terms().rbegin()->second.inverse();
  for (const auto& f : b.excluded)
    if (f == norm) return;
  b.excluded.push_back(std::move(norm));
}

// p with var = -b/a, cleared of the denominator (declared below, defined
// after this group so the substitution helpers can use it)
MultiPoly substitute_fraction(const MultiPoly& p, int var, const MultiPoly& a,
                              const MultiPoly& b);

void refresh_excluded(Branch& b) {
  std::vector<MultiPoly> keep;
  for (auto& f : b.excluded) {
    if (f.is_zero())
      fail(b, "a solved value landed on an excluded locus");
    if (!f.is_constant()) keep.push_back(std::move(f));
  }
  b.excluded = std::move(keep);
}

void reduce_vec(const Branch& b, Vec& vec);

void substitute_root(Branch& b, int var, const FieldElement& root) {
  for (auto& [pos, vec] : b.store) {
    for (auto& e : vec) e = e.substitute(var, root);
    reduce_vec(b, vec);
  }
  for (auto& p : b.pending) p = p.substitute(var, root);
  for (auto& f : b.excluded) f = f.substitute(var, root);
  refresh_excluded(b);
}

void substitute_poly(Branch& b, int var, const MultiPoly& value) {
  for (auto& [pos, vec] : b.store) {
    for (auto& e : vec) e = e.substitute(var, value);
    reduce_vec(b, vec);
  }
  for (auto& p : b.pending) p = p.substitute(var, value);
  for (auto& f : b.excluded) f = f.substitute(var, value);
  refresh_excluded(b);
}

void lift_branch(Branch& b, const TowerPtr& t) {
  for (auto& [pos, vec] : b.store)
    for (auto& e : vec) e = e.map_coeffs(t);
  for (auto& p : b.pending) p = p.map_coeffs(t);
  for (auto& f : b.excluded) f = f.map_coeffs(t);
  b.tower = t;
}

// p with var = -b/a, cleared of the denominator: sum of
// coeff_of(var,k) * (-b)^k * a^(deg-k).  Used when a variable is eliminated
// projectively, so pending constraints stay polynomial.
MultiPoly substitute_fraction(const MultiPoly& p, int var, const MultiPoly& a,
                              const MultiPoly& b) {
  int deg = p.degree_in(var);
  if (deg == 0) return p;
  MultiPoly nb = -b;
  MultiPoly result;
  MultiPoly num_pow = MultiPoly::constant(FieldElement(1));
  std::vector<MultiPoly> a_pows(deg + 1);
  a_pows[0] = MultiPoly::constant(FieldElement(1));
  for (int k = 1; k <= deg; ++k) a_pows[k] = a_pows[k - 1] * a;
  for (int k = 0; k <= deg; ++k) {
    result = result + p.coeff_of(var, k) * num_pow * a_pows[deg - k];
    num_pow = num_pow * nb;
  }
  return result;
}

// Divide out the monomial content of a condition.  A variable dividing
// every term is a combination coefficient whose vanishing would degenerate
// the construction, so it is assumed nonzero (recorded in the excluded
// ledger) and removed from the condition.
MultiPoly strip_var_content(Branch& b, MultiPoly m) {
  if (m.is_zero() || m.is_constant()) return m;
  std::vector<int> content;
  bool first = true;
  for (const auto& [exps, c] : m.terms()) {
    if (first) {
      content = exps;
      first = false;
      continue;
    }
    for (size_t i = 0; i < content.size(); ++i)
      content[i] = std::min(content[i],
                            i < exps.size() ? exps[i] : 0);
    while (!content.empty() && content.back() == 0) content.pop_back();
  }
  for (size_t v = 0; v < content.size(); ++v) {
    if (content[v] <= 0) continue;
    MultiPoly var = MultiPoly::variable(static_cast<int>(v));
    add_excluded(b, var);
    for (int k = 0; k < content[v]; ++k) {
      MultiPoly q;
      if (!try_exact_divide(m, var, &q)) break;
      m = std::move(q);
    }
  }
  return m;
}

// canonical scale (integer-primitive over the rationals, else unit leading
// coefficient) and drop exact duplicates
void push_pending(Branch& b, const MultiPoly& m_in) {
  MultiPoly m = strip_var_content(b, strip_excluded(b, m_in));
  if (m.is_zero()) return;
  if (m.is_constant())
    fail(b, "a rank condition is unsatisfiable on this branch");
  MultiPoly norm;
  bool rational = true;
  for (const auto& [exps, c] : m.terms())
    if (!c.is_rational()) {
      rational = false;
      break;
    }
  if (rational) {
    mpz_class num = 0, den = 1;
    for (const auto& [exps, c] : m.terms()) {
      mpq_class q = c.rational();
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    if (scale < 0) scale = -scale;
    if (m.terms().rbegin()->second.rational() < 0) scale = -scale;
    norm = m * FieldElement(scale);
  } else {
    norm = m * m.terms().rbegin()->second.inverse();
  }
  for (const auto& p : b.pending)
    if (p == norm) return;
  b.pending.push_back(std::move(norm));
}

int main_var(const MultiPoly& p) {
  int mv = -1;
  for (int v : p.vars_used()) mv = std::max(mv, v);
  return mv;
}

MultiPoly mv_gcd(MultiPoly a, MultiPoly b);

// gcd of the coefficients of p viewed as a polynomial in y
MultiPoly mv_content(const MultiPoly& p, int y) {
  MultiPoly c;
  for (int k = 0; k <= p.degree_in(y); ++k) {
    MultiPoly ck = p.coeff_of(y, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : mv_gcd(c, ck);
    if (c.is_constant()) break;
  }
  return c;
}

// r scaled by powers of the leading coefficient of b until deg_y < deg_y(b)
MultiPoly pseudo_rem(MultiPoly r, const MultiPoly& b, int y) {
  const int db = b.degree_in(y);
  const MultiPoly lb = b.coeff_of(y, db);
  while (!r.is_zero()) {
    const int dr = r.degree_in(y);
    if (dr < db) break;
    MultiPoly lr = r.coeff_of(y, dr);
    MultiPoly shift = MultiPoly::constant(FieldElement(1));
    for (int k = 0; k < dr - db; ++k) shift = shift * MultiPoly::variable(y);
    r = r * lb - b * (lr * shift);
  }
  return r;
}

// multivariate gcd by the primitive pseudo-remainder sequence
MultiPoly mv_gcd(MultiPoly a, MultiPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(FieldElement(1));
  const int y = std::max(main_var(a), main_var(b));
  const int da = a.degree_in(y), db = b.degree_in(y);
  if (da == 0 || db == 0) {
    // only one of them involves y: the gcd divides its y-content
    const MultiPoly& with = da == 0 ? b : a;
    const MultiPoly& other = da == 0 ? a : b;
    return mv_gcd(mv_content(with, y), other);
  }
  MultiPoly ca = mv_content(a, y), cb = mv_content(b, y);
  MultiPoly f, g;
  try_exact_divide(a, ca, &f);
  try_exact_divide(b, cb, &g);
  MultiPoly cg = mv_gcd(ca, cb);
  if (f.degree_in(y) < g.degree_in(y)) std::swap(f, g);
  while (!g.is_zero() && g.degree_in(y) > 0) {
    MultiPoly r = pseudo_rem(f, g, y);
    f = std::move(g);
    if (r.is_zero()) {
      g = std::move(r);
      break;
    }
    MultiPoly cr = mv_content(r, y);
    try_exact_divide(r, cr, &g);
  }
  if (!g.is_zero()) return cg;  // coprime in y
  MultiPoly cf = mv_content(f, y);
  MultiPoly pf;
  try_exact_divide(f, cf, &pf);
  return cg * pf;
}

// Sylvester resultant of f and g with respect to a shared variable.  The
// resultant lies in the ideal generated by f and g, so its vanishing is a
// valid derived condition with one variable fewer.
MultiPoly resultant_in(const MultiPoly& f, const MultiPoly& g, int v) {
  const int df = f.degree_in(v), dg = g.degree_in(v);
  const int N = df + dg;
  ExactMatrix m(N, std::vector<MultiPoly>(N));
  for (int i = 0; i < dg; ++i)
    for (int k = 0; k <= df; ++k) m[i][i + k] = f.coeff_of(v, df - k);
  for (int i = 0; i < df; ++i)
    for (int k = 0; k <= dg; ++k) m[dg + i][i + k] = g.coeff_of(v, dg - k);
  return poly_determinant(m);
}

// Greedy echelon basis over the polynomial ring (cross-multiplication, no
// division): used both to pick basis sets and to test symbolic independence.
struct SymbolicEchelon {
  std::vector<Vec> rows;   // reduced rows
  std::vector<int> pivot;  // pivot column per row

  // true (and absorbs the row) when it enlarges the span
  bool add(Vec cand) {
    const int n = cand.empty() ? 0 : static_cast<int>(cand.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      int p = pivot[r];
      if (cand[p].is_zero()) continue;
      MultiPoly a = rows[r][p], c = cand[p];
      for (int j = 0; j < n; ++j) cand[j] = cand[j] * a - rows[r][j] * c;
    }
    for (int j = 0; j < n; ++j)
      if (!cand[j].is_zero()) {
        rows.push_back(std::move(cand));
        pivot.push_back(j);
        return true;
      }
    return false;
  }
};

UniPoly tpoly_rational(const TPoly& p) {
  std::vector<mpq_class> c;
  for (const auto& x : p) c.push_back(x.rational());
  return UniPoly(std::move(c));
}

// gather the rational coordinates of a field element, through extensions
void collect_rationals(const FieldElement& e, mpz_class& num, mpz_class& den) {
  if (e.is_rational()) {
    mpq_class q = e.rational();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    return;
  }
  for (const auto& c : e.coeffs()) collect_rationals(c, num, den);
}

// Cheap size control for a stored vector: divide out excluded factors
// common to every entry (rescaling artifacts) and the rational content.
void reduce_vec(const Branch& b, Vec& vec) {
  for (const auto& f : b.excluded) {
    if (f.is_constant()) continue;
    for (;;) {
      std::vector<MultiPoly> quots;
      bool all = true;
      for (const auto& e : vec) {
        if (e.is_zero()) {
          quots.push_back(e);
          continue;
        }
        MultiPoly q;
        if (!try_exact_divide(e, f, &q)) {
          all = false;
          break;
        }
        quots.push_back(std::move(q));
      }
      if (!all) break;
      vec = quots;
    }
  }
  mpz_class num = 0, den = 1;
  for (const auto& e : vec)
    for (const auto& [exp, c] : e.terms()) collect_rationals(c, num, den);
  if (num == 0) return;
  mpq_class scale(den, num);
  scale.canonicalize();
  if (scale == 1) return;
  FieldElement s = b.tower ? lift_to(FieldElement(scale), b.tower)
                           : FieldElement(scale);
  for (auto& e : vec) e = e * s;
}

// Reduce a rank condition by eliminating with the fully constant rows
// (exact division by constant pivots keeps everything polynomial): the
// condition rank(M) <= t becomes rank(residual) <= t - #constant pivots on
// the non-pivot columns.  Throws NotGeneric when the constants alone
// exceed the target.
struct ReducedCondition {
  ExactMatrix residual;  // non-constant rows, pivot columns removed
  int target = 0;        // residual rank bound; < 0 means violated
};

ReducedCondition reduce_condition(const ExactMatrix& mat, int target) {
  Matrix<FieldElement> consts;
  std::vector<const std::vector<MultiPoly>*> polys;
  for (const auto& row : mat) {
    bool all_const = true;
    for (const auto& e : row)
      if (!e.is_constant()) {
        all_const = false;
        break;
      }
    if (all_const) {
      std::vector<FieldElement> r;
      for (const auto& e : row) r.push_back(e.constant_value());
      consts.push_back(std::move(r));
    } else {
      polys.push_back(&row);
    }
  }
  std::vector<int> pivots = rref(consts);
  const int c = static_cast<int>(pivots.size());
  ReducedCondition red;
  red.target = target - c;
  if (red.target < 0) {
    if (c > target) {
      // the constant rows alone certify rank > target
      red.target = -1;
      return red;
    }
  }
  const int cols = mat.empty() ? 0 : static_cast<int>(mat[0].size());
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (const auto* rp : polys) {
    std::vector<MultiPoly> row = *rp;
    for (int k = 0; k < c; ++k) {
      MultiPoly f = row[pivots[k]];
      if (f.is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        row[j] = row[j] - f * MultiPoly::constant(consts[k][j]);
    }
    std::vector<MultiPoly> rest;
    bool nonzero = false;
    for (int j = 0; j < cols; ++j) {
      if (is_pivot[j]) continue;
      if (!row[j].is_zero()) nonzero = true;
      rest.push_back(std::move(row[j]));
    }
    if (nonzero) red.residual.push_back(std::move(rest));
  }
  return red;
}

void solve_conditions(Ctx& ctx, Branch work, int level, size_t region_idx,
                      std::vector<Branch>& out);

// Branch over the roots of a univariate condition.  Roots that annihilate a
// stored vector are artifacts of projective rescaling and are discarded.
// When `spec` is set the condition is only a derived (necessary) one, so
// the branches are speculative: a dead end among them is discarded quietly.
void branch_on_factors(Ctx& ctx, const Branch& work, int var, const TPoly& u,
                       int level, size_t region_idx, std::vector<Branch>& out,
                       bool spec) {
  auto factors = factor_over(work.tower, u);  // may throw UnsupportedAlgebra
  const bool spec_children = spec || work.speculative;
  bool any_branch = false;

  auto root_is_spurious = [&](const Branch& base, const FieldElement& root) {
    for (const auto& f : base.excluded)
      if (f.substitute(var, root).is_zero()) return true;
    for (const auto& [pos, vec] : base.store) {
      if (!vec_uses_var(vec, var)) continue;
      bool all_zero = true;
      for (const auto& e : vec)
        if (!e.substitute(var, root).is_zero()) {
          all_zero = false;
          break;
        }
      if (all_zero) return true;
    }
    return false;
  };

  for (const auto& fac : factors) {
    const TPoly& f = fac.poly;
    if (tp_degree(f) == 1) {
      FieldElement root = -(f[0] / f[1]);
      if (root_is_spurious(work, root)) continue;
      if (root.is_zero()) {
        if (spec_children) continue;
        throw NotGeneric("a combination coefficient is forced to zero");
      }
      Branch b = work;
      b.speculative = spec_children;
      try {
        substitute_root(b, var, root);
        b.prov.push_back("set " + ctx.var_names[var] + " = " +
                         root.to_string());
        solve_conditions(ctx, std::move(b), level, region_idx, out);
      } catch (const BranchDead&) {
      }
      any_branch = true;
      continue;
    }
    // an extension is required: adjoin one root, then look for the other
    // roots of the factor inside the new tower
    if (!work.tower && ctx.report)
      ctx.report->rational_branch_polys.push_back(tpoly_rational(f));
    std::string gen = "r" + std::to_string(++ctx.extension_count);
    AdjoinResult ar = adjoin_root(work.tower, f, gen);
    TPoly flift;
    for (const auto& c : f) flift.push_back(lift_to(c, ar.tower));
    TPoly rest =
        tp_divmod(flift, TPoly{-ar.root, FieldElement(1)}).first;
    std::vector<FieldElement> roots = {ar.root};
    int unexpanded = 0;
    if (tp_degree(rest) == 1) {
      roots.push_back(-(rest[0] / rest[1]));
    } else if (tp_degree(rest) >= 2) {
      if (tower_height(ar.tower) <= 1) {
        for (const auto& g : factor_over(ar.tower, rest)) {
          if (tp_degree(g.poly) == 1)
            roots.push_back(-(g.poly[0] / g.poly[1]));
          else
            unexpanded += tp_degree(g.poly) * g.multiplicity;
        }
      } else {
        unexpanded = tp_degree(rest);
      }
    }
    Branch lifted = work;
    lift_branch(lifted, ar.tower);
    bool first = true;
    for (const auto& root : roots) {
      if (root_is_spurious(lifted, root)) {
        first = false;
        continue;
      }
      if (root.is_zero()) {
        if (spec_children) {
          first = false;
          continue;
        }
        throw NotGeneric("a combination coefficient is forced to zero");
      }
      Branch b = lifted;
      b.speculative = spec_children;
      b.mult = work.mult * (first ? 1 + unexpanded : 1);
      try {
        substitute_root(b, var, root);
        b.prov.push_back("adjoined root " + gen + " of " +
                         tp_to_string(f, ctx.var_names[var]) + "; set " +
                         ctx.var_names[var] + " = " + root.to_string());
        solve_conditions(ctx, std::move(b), level, region_idx, out);
      } catch (const BranchDead&) {
      }
      any_branch = true;
      first = false;
    }
  }
  if (!any_branch)
    fail(spec_children, "every root of a branch polynomial was degenerate");
}

// Resolve one batch of nonzero minors.  Returns true when a substitution
// was applied in place (the caller recomputes); when the condition forked,
// recursion has already continued and the caller must stop.
enum class Resolved { Applied, Branched, Deferred };

Resolved resolve_minors(Ctx& ctx, Branch& work, const std::vector<MultiPoly>& raw,
                        int level, size_t region_idx, std::vector<Branch>& out,
                        int depth = 0) {
  // Aggressive cleaning and elimination are reserved for the settlement
  // phase (region_idx past the end): during the region sweep the plain
  // linear/univariate resolution below is almost always enough, and the
  // extra work changes nothing but costs a great deal.
  const bool settle = region_idx >= ctx.region.size();
  std::vector<MultiPoly> minors;
  for (const auto& m0 : raw) {
    MultiPoly m = settle ? strip_var_content(work, strip_excluded(work, m0))
                         : m0;
    if (m.is_zero()) continue;
    if (m.is_constant())
      fail(work, "a rank condition is unsatisfiable on this branch");
    minors.push_back(std::move(m));
  }
  if (minors.empty()) return Resolved::Applied;

  // univariate and linear: direct substitution
  for (const auto& m : minors) {
    auto vars = m.vars_used();
    if (vars.size() != 1) continue;
    TPoly u;
    m.univariate_in(vars[0], &u);
    if (tp_degree(u) == 1) {
      FieldElement root = -(u[0] / u[1]);
      if (root.is_zero()) {
        // distinguish a genuine forced zero from a rescaling artifact
        bool spurious = false;
        for (const auto& [pos, vec] : work.store)
          if (vec_uses_var(vec, vars[0])) {
            bool all_zero = true;
            for (const auto& e : vec)
              if (!e.substitute(vars[0], root).is_zero()) all_zero = false;
            if (all_zero) spurious = true;
          }
        if (spurious)
          fail(work, "a rescaled vector degenerated while solving");
        fail(work, "a combination coefficient is forced to zero");
      }
      substitute_root(work, vars[0], root);
      work.prov.push_back("set " + ctx.var_names[vars[0]] + " = " +
                          root.to_string());
      return Resolved::Applied;
    }
  }

  // multivariate but linear in a variable with a constant coefficient
  for (const auto& m : minors) {
    for (int v : m.vars_used()) {
      if (m.degree_in(v) != 1) continue;
      MultiPoly a = m.coeff_of(v, 1);
      if (!a.is_constant()) continue;
      MultiPoly b = m.coeff_of(v, 0);
      MultiPoly value = -b * a.constant_value().inverse();
      if (value.is_zero())
        fail(work, "a combination coefficient is forced to zero");
      substitute_poly(work, v, value);
      work.prov.push_back("eliminated " + ctx.var_names[v]);
      return Resolved::Applied;
    }
  }

  // linear with a polynomial coefficient a: substitute var = -b/a
  // projectively, rescaling every vector that carries the variable (each
  // vector is only defined up to scale) and recording a != 0 as a branch
  // assumption so its powers can be divided out of later conditions
  for (const auto& m : minors) {
    for (int v : m.vars_used()) {
      if (m.degree_in(v) != 1) continue;
      MultiPoly a = m.coeff_of(v, 1);
      MultiPoly b = m.coeff_of(v, 0);
      if (b.is_zero())
        fail(work, "a combination coefficient is forced to zero");
      for (auto& [pos, vec] : work.store) {
        int deg = 0;
        for (const auto& e : vec) deg = std::max(deg, e.degree_in(v));
        if (deg == 0) continue;
        MultiPoly nb = -b;
        for (auto& e : vec) {
          MultiPoly acc;
          MultiPoly num_pow = MultiPoly::constant(FieldElement(1));
          for (int k = 0; k <= deg; ++k) {
            MultiPoly apow = MultiPoly::constant(FieldElement(1));
            for (int t = 0; t < deg - k; ++t) apow = apow * a;
            acc = acc + e.coeff_of(v, k) * num_pow * apow;
            num_pow = num_pow * nb;
          }
          e = acc;
        }
        if (vec_is_zero(vec))
          fail(work, "a rescaled vector degenerated while solving");
      }
      for (auto& p : work.pending) p = substitute_fraction(p, v, a, b);
      add_excluded(work, a);
      for (auto& [pos, vec] : work.store) reduce_vec(work, vec);
      work.prov.push_back("eliminated " + ctx.var_names[v] +
                          " projectively");
      return Resolved::Applied;
    }
  }

  // univariate of higher degree: factor and branch
  for (const auto& m : minors) {
    auto vars = m.vars_used();
    if (vars.size() != 1) continue;
    TPoly u;
    m.univariate_in(vars[0], &u);
    branch_on_factors(ctx, work, vars[0], u, level, region_idx, out,
                      depth > 0);
    return Resolved::Branched;
  }

  // Elimination: the resultant of two conditions with respect to a shared
  // variable is a derived condition with one variable fewer.  Conditions
  // resolved through derived equations are handled speculatively, since a
  // resultant root need not extend to a common root of the pair.
  // Common-factor splitting: when two deferred conditions share a factor g
  // (p = g*a, q = g*b), their common zero locus is the union of g = 0 and
  // {a = 0, b = 0; g != 0}.  Both parts are explored speculatively.
  if (settle) {
    auto in_pending = [&](const MultiPoly& q) {
      MultiPoly nq = q * q.terms().rbegin()->second.inverse();
      for (const auto& p : work.pending)
        if (p * p.terms().rbegin()->second.inverse() == nq) return true;
      return false;
    };
    for (size_t i = 0; i < minors.size(); ++i)
      for (size_t j = i + 1; j < minors.size(); ++j) {
        MultiPoly g = mv_gcd(minors[i], minors[j]);
        if (g.is_zero() || g.is_constant()) continue;
        // splitting on a factor that is already a recorded condition makes
        // no progress; skip it to keep the recursion well-founded
        if (in_pending(g)) continue;
        if (trace_enabled())
          std::fprintf(stderr,
                       "[trace] split on common factor of %zu terms\n",
                       g.terms().size());
        auto remove_from_pending = [](Branch& b, const MultiPoly& q) {
          MultiPoly nq = q * q.terms().rbegin()->second.inverse();
          for (size_t k = 0; k < b.pending.size(); ++k)
            if (b.pending[k] *
                    b.pending[k].terms().rbegin()->second.inverse() ==
                nq) {
              b.pending.erase(b.pending.begin() + k);
              return true;
            }
          return false;
        };
        {
          // closed part: the common factor vanishes, which satisfies both
          Branch b = work;
          b.speculative = true;
          remove_from_pending(b, minors[i]);
          remove_from_pending(b, minors[j]);
          try {
            push_pending(b, g);
            solve_conditions(ctx, std::move(b), level, ctx.region.size(), out);
          } catch (const BranchDead&) {
          }
        }
        {
          // open part: the common factor is nonzero, so the cofactors must
          // vanish.  Conditions that are rebuilt from the vectors re-derive
          // their cofactors through the exclusion; only pending ones need
          // an explicit replacement.
          Branch b = work;
          b.speculative = true;
          bool was_i = remove_from_pending(b, minors[i]);
          bool was_j = remove_from_pending(b, minors[j]);
          add_excluded(b, g);
          try {
            MultiPoly q;
            if (was_i && try_exact_divide(minors[i], g, &q))
              push_pending(b, q);
            if (was_j && try_exact_divide(minors[j], g, &q))
              push_pending(b, q);
            solve_conditions(ctx, std::move(b), level, ctx.region.size(), out);
          } catch (const BranchDead&) {
          }
        }
        return Resolved::Branched;
      }
  }

  if (settle && depth < 2) {
    std::vector<MultiPoly> ext = minors;
    std::sort(ext.begin(), ext.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                return a.terms().size() < b.terms().size();
              });
    const size_t cap = std::min<std::size_t>(ext.size(), 8);
    bool grew = false;
    for (size_t i = 0; i < cap; ++i)
      for (size_t j = i + 1; j < cap; ++j)
        for (int v : ext[i].vars_used()) {
          const int df = ext[i].degree_in(v), dg = ext[j].degree_in(v);
          if (df < 1 || dg < 1 || df + dg > 6) continue;
          if (ext[i].terms().size() > 60 || ext[j].terms().size() > 60)
            continue;
          if (trace_enabled())
            std::fprintf(stderr,
                         "[trace] resultant in var %d: deg %d+%d, terms "
                         "%zu/%zu\n",
                         v, df, dg, ext[i].terms().size(),
                         ext[j].terms().size());
          MultiPoly r = strip_excluded(work, resultant_in(ext[i], ext[j], v));
          r = strip_var_content(work, r);
          if (r.is_zero()) continue;
          if (r.is_constant())
            fail(work, "two rank conditions are incompatible");
          MultiPoly norm = r * r.terms().rbegin()->second.inverse();
          bool dup = false;
          for (const auto& p : ext)
            if (p == norm) {
              dup = true;
              break;
            }
          if (!dup) {
            ext.push_back(std::move(norm));
            grew = true;
          }
        }
    if (grew)
      return resolve_minors(ctx, work, ext, level, region_idx, out, depth + 1);
  }

  // nothing in this batch is resolvable yet
  return Resolved::Deferred;
}

// Rows and rank target of the region condition at x for the given level.
// Returns false when the condition is trivially satisfied.
bool build_condition(Ctx& ctx, Branch& work, int level, const Position& x,
                     std::vector<const Vec*>* rows, int* target) {
  const DotArray& Pi = ctx.slices[level - 1];
  const DotArray& Pnext = ctx.slices[level];  // P_{i+1}
  DotArray dominated = principal_subarray(Pi, x);
  if (dominated.empty()) return false;
  rows->clear();
  if (dominated.size() == 1 && dominated.dots()[0] == x) {
    // a lone dot: its vector together with every carried vector must not
    // exceed the level's dimension
    rows->push_back(&work.store.at(x));
    for (const auto& y : Pi.dots())
      if (y != x && Pnext.contains(y)) rows->push_back(&work.store.at(y));
    *target = level;
  } else {
    for (const auto& y : dominated.dots()) rows->push_back(&work.store.at(y));
    *target = ctx.slice_rank[level - 1].at(x);
  }
  return static_cast<int>(rows->size()) > *target;
}

void solve_conditions(Ctx& ctx, Branch work, int level, size_t region_idx,
                      std::vector<Branch>& out) {
  for (size_t j = region_idx; j < ctx.region.size(); ++j) {
    const Position& x = ctx.region[j];
    std::vector<const Vec*> rows;
    int target = 0;
    if (!build_condition(ctx, work, level, x, &rows, &target)) continue;

    for (int guard = 0;; ++guard) {
      if (guard > 200)
        throw UnsupportedAlgebra("rank condition failed to stabilize");
      ExactMatrix mat;
      for (const Vec* r : rows) mat.push_back(*r);
      ReducedCondition red = reduce_condition(mat, target);
      if (trace_enabled() && guard == 0)
        std::fprintf(stderr,
                     "[trace] level %d cond at %s: rows %zu target %d "
                     "residual %zux target %d\n",
                     level, position_to_string(x).c_str(), rows.size(), target,
                     red.residual.size(), red.target);
      if (red.target < 0)
        fail(work, "a rank condition is unsatisfiable on this branch");
      if (static_cast<int>(red.residual.size()) <= red.target) break;
      std::vector<MultiPoly> nonzero;
      for (auto& mm : minors_k(red.residual, red.target + 1)) {
        if (mm.is_zero()) continue;
        nonzero.push_back(strip_excluded(work, std::move(mm)));
      }
      if (nonzero.empty()) break;
      Resolved res = resolve_minors(ctx, work, nonzero, level, j, out);
      if (res == Resolved::Branched)
        return;  // recursion already finished the region on each branch
      if (res == Resolved::Deferred) {
        // remember the position; the condition is rebuilt from the current
        // vectors whenever it is revisited
        std::pair<int, Position> key{level, x};
        if (std::find(work.deferred.begin(), work.deferred.end(), key) ==
            work.deferred.end())
          work.deferred.push_back(std::move(key));
        break;
      }
      // a substitution was applied; the row pointers are stable, so just
      // recompute the minors
    }
  }

  // Settlement: revisit deferred conditions, whose matrices are re-derived
  // from the current vectors, and derived pending conditions.  Later
  // substitutions often make them resolvable.
  for (int guard = 0;; ++guard) {
    if (guard > 200)
      throw UnsupportedAlgebra("deferred conditions failed to stabilize");
    bool progress = false;
    for (size_t di = 0; di < work.deferred.size();) {
      const auto [lvl, x] = work.deferred[di];
      std::vector<const Vec*> rows;
      int target = 0;
      if (!build_condition(ctx, work, lvl, x, &rows, &target)) {
        work.deferred.erase(work.deferred.begin() + di);
        progress = true;
        continue;
      }
      ExactMatrix mat;
      for (const Vec* r : rows) mat.push_back(*r);
      ReducedCondition red = reduce_condition(mat, target);
      if (red.target < 0)
        fail(work, "a rank condition is unsatisfiable on this branch");
      if (static_cast<int>(red.residual.size()) <= red.target) {
        work.deferred.erase(work.deferred.begin() + di);
        progress = true;
        continue;
      }
      std::vector<MultiPoly> nonzero;
      for (auto& mm : minors_k(red.residual, red.target + 1)) {
        if (mm.is_zero()) continue;
        nonzero.push_back(strip_excluded(work, std::move(mm)));
      }
      if (nonzero.empty()) {
        work.deferred.erase(work.deferred.begin() + di);
        progress = true;
        continue;
      }
      Resolved res =
          resolve_minors(ctx, work, nonzero, lvl, ctx.region.size(), out);
      if (res == Resolved::Branched) return;
      if (res == Resolved::Applied) {
        progress = true;  // recompute this condition before moving on
      } else {
        ++di;  // still stuck
      }
    }
    std::vector<MultiPoly> live;
    for (const auto& p : work.pending) {
      MultiPoly s = strip_excluded(work, p);
      if (!s.is_zero()) live.push_back(std::move(s));
    }
    work.pending = live;
    if (!live.empty()) {
      Resolved res =
          resolve_minors(ctx, work, live, level, ctx.region.size(), out);
      if (res == Resolved::Branched) return;
      if (res == Resolved::Applied) progress = true;
    }
    if (!progress) break;
  }
  out.push_back(std::move(work));
}

// true when some deferred condition evaluates fully constant and fails
bool deferred_violated(Ctx& ctx, Branch& b) {
  for (const auto& [lvl, x] : b.deferred) {
    std::vector<const Vec*> rows;
    int target = 0;
    if (!build_condition(ctx, b, lvl, x, &rows, &target)) continue;
    Matrix<FieldElement> m;
    bool constant = true;
    for (const Vec* r : rows) {
      std::vector<FieldElement> row;
      for (const auto& e : *r) {
        if (!e.is_constant()) {
          constant = false;
          break;
        }
        row.push_back(e.constant_value());
      }
      if (!constant) break;
      m.push_back(std::move(row));
    }
    if (!constant) continue;
    if (rank_of(m) > target) return true;
  }
  return false;
}

void finalize(Ctx& ctx, const Branch& branch) {
  if (trace_enabled()) {
    std::ostringstream os;
    os << "[trace] finalize, store:\n";
    for (const auto& [pos, vec] : branch.store) {
      os << "  " << position_to_string(pos) << ":";
      for (const auto& e : vec) os << " (" << e.to_string(ctx.var_names) << ")";
      os << "\n";
    }
    for (const auto& p : branch.pending)
      os << "  pending: " << p.to_string(ctx.var_names) << "\n";
    std::fputs(os.str().c_str(), stderr);
  }
  // indeterminates that survive every rank condition only select the
  // representative vector inside an already-determined span: set each to an
  // arbitrary nonzero value that does not annihilate a vector.  Genuinely
  // free parameters are caught below, by the membership re-check and by
  // comparing the spans produced by two different assignments.
  auto assign = [&](Branch b, int salt, Branch* done) -> bool {
    for (int guard = 0; guard < 1000; ++guard) {
      int var = -1;
      for (const auto& [pos, vec] : b.store) {
        for (const auto& e : vec)
          for (int v : e.vars_used())
            if (var < 0 || v < var) var = v;
        (void)pos;
      }
      if (var < 0) break;
      bool ok = false;
      for (int t = 1 + salt; t <= 9 + salt && !ok; ++t) {
        Branch c = b;
        try {
          substitute_root(c, var, FieldElement(t));
        } catch (const NotGeneric&) {
          continue;
        } catch (const BranchDead&) {
          continue;
        }
        bool bad = false;
        for (const auto& [pos, vec] : c.store)
          if (vec_is_zero(vec)) {
            bad = true;
            if (trace_enabled())
              std::fprintf(stderr, "[trace] gauge %s = %d kills vector at %s\n",
                           ctx.var_names[var].c_str(), t,
                           position_to_string(pos).c_str());
          }
        for (const auto& p : c.pending)
          if (p.is_constant() && !p.is_zero()) {
            bad = true;
            if (trace_enabled())
              std::fprintf(stderr, "[trace] gauge %s = %d violates pending\n",
                           ctx.var_names[var].c_str(), t);
          }
        if (!bad && deferred_violated(ctx, c)) {
          bad = true;
          if (trace_enabled())
            std::fprintf(stderr,
                         "[trace] gauge %s = %d violates a deferred "
                         "condition\n",
                         ctx.var_names[var].c_str(), t);
        }
        if (bad) continue;
        b = std::move(c);
        ok = true;
      }
      if (!ok) return false;
    }
    for (const auto& p : b.pending)
      if (!p.is_zero()) return false;
    if (deferred_violated(ctx, b)) return false;
    *done = std::move(b);
    return true;
  };

  bool had_vars = false;
  for (const auto& [pos, vec] : branch.store)
    for (const auto& e : vec)
      if (!e.is_constant()) had_vars = true;

  Branch done;
  if (!assign(branch, 0, &done))
    fail(branch, "an indeterminate survived all rank conditions");

  auto build_levels = [&](const Branch& b) {
    std::vector<Matrix<FieldElement>> levels;
    for (int lvl = 1; lvl <= ctx.n; ++lvl) {
      Matrix<FieldElement> m;
      for (const auto& y : ctx.slices[lvl - 1].dots()) {
        std::vector<FieldElement> row;
        for (const auto& e : b.store.at(y)) row.push_back(e.constant_value());
        m.push_back(std::move(row));
      }
      rref(m);
      while (!m.empty()) {
        bool zero = true;
        for (const auto& e : m.back())
          if (!e.is_zero()) zero = false;
        if (!zero) break;
        m.pop_back();
      }
      if (static_cast<int>(m.size()) != lvl)
        fail(b, "a solved level has the wrong dimension");
      levels.push_back(std::move(m));
    }
    return levels;
  };

  auto levels = build_levels(done);

  // membership re-check: the vector ranks must realize the slice rank
  // tables over the whole condition region
  for (int lvl = 1; lvl <= ctx.n; ++lvl) {
    const DotArray& Pi = ctx.slices[lvl - 1];
    for (const auto& x : ctx.region) {
      DotArray dominated = principal_subarray(Pi, x);
      if (dominated.empty()) continue;
      Matrix<FieldElement> m;
      for (const auto& y : dominated.dots()) {
        std::vector<FieldElement> row;
        for (const auto& e : done.store.at(y)) row.push_back(e.constant_value());
        m.push_back(std::move(row));
      }
      if (rank_of(m) != ctx.slice_rank[lvl - 1].at(x))
        fail(done, "a rank condition fails for the assembled flag");
    }
  }

  if (had_vars) {
    Branch alt;
    if (!assign(branch, 10, &alt))
      fail(branch, "an indeterminate survived all rank conditions");
    auto alt_levels = build_levels(alt);
    if (alt_levels != levels)
      fail(branch, "a free parameter moves the solution flag");
  }

  SolutionFlag sol;
  sol.tower = done.tower;
  sol.conjugates = done.mult;
  sol.provenance = done.prov;
  sol.levels = std::move(levels);
  ctx.report->solutions.push_back(std::move(sol));
  ctx.report->solution_count += done.mult;
}

void solve_level(Ctx& ctx, const Branch& branch, int level) {
  if (level == 0) {
    finalize(ctx, branch);
    return;
  }
  const DotArray& Pi = ctx.slices[level - 1];
  const DotArray& Pnext = ctx.slices[level];

  std::vector<Position> newdots;
  for (const auto& x : Pi.dots())
    if (!Pnext.contains(x)) newdots.push_back(x);

  // per new dot: the lexicographically earliest independent subset of the
  // dominated dots of the level above
  std::vector<std::vector<Position>> basis_sets;
  for (const auto& x : newdots) {
    SymbolicEchelon ech;
    std::vector<Position> basis;
    const DotArray above = principal_subarray(Pnext, x);
    for (const auto& y : above.dots())
      if (ech.add(branch.store.at(y))) basis.push_back(y);
    if (basis.empty())
      throw Inconsistent("a new dot has no spanning set above it");
    basis_sets.push_back(std::move(basis));
  }

  // normalization ladder: baseline puts the unit coefficient on the first
  // basis vector; retries move it to a later one, one dot at a time
  std::vector<std::vector<int>> ladders = {std::vector<int>(newdots.size(), 0)};
  for (size_t t = 0; t < newdots.size(); ++t)
    for (int k = 1; k < static_cast<int>(basis_sets[t].size()); ++k) {
      std::vector<int> norm(newdots.size(), 0);
      norm[t] = k;
      ladders.push_back(std::move(norm));
    }

  std::string first_failure;
  for (const auto& norm : ladders) {
    Branch work = branch;
    for (size_t t = 0; t < newdots.size(); ++t) {
      const auto& basis = basis_sets[t];
      Vec v(ctx.n);
      for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
        const Vec& bk = work.store.at(basis[k]);
        if (k == norm[t]) {
          for (int c = 0; c < ctx.n; ++c) v[c] = v[c] + bk[c];
        } else {
          MultiPoly cv = MultiPoly::variable(fresh_var(ctx, level));
          for (int c = 0; c < ctx.n; ++c) v[c] = v[c] + cv * bk[c];
        }
      }
      reduce_vec(work, v);
      work.store[newdots[t]] = std::move(v);
    }
    std::vector<Branch> states;
    try {
      solve_conditions(ctx, std::move(work), level, 0, states);
    } catch (const NotGeneric& e) {
      if (first_failure.empty()) first_failure = e.what();
      continue;  // next rung of the ladder
    } catch (const BranchDead& e) {
      if (first_failure.empty()) first_failure = e.reason;
      continue;
    }
    for (auto& s : states) {
      try {
        solve_level(ctx, s, level - 1);
      } catch (const BranchDead&) {
        // a speculative state died deeper down; it contributes nothing
      }
    }
    return;
  }
  fail(branch, first_failure.empty() ? "no admissible normalization"
                                     : first_failure);
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry points.
// ---------------------------------------------------------------------------

SolveReport solve(const SchubertProblem& prob, const std::vector<QFlag>& flags) {
  if (!prob.zero_dimensional())
    throw LengthMismatch("condition lengths must sum to n(n-1)/2");
  if (static_cast<int>(flags.size()) != prob.d())
    throw DimensionMismatch("one flag per condition is required");

  SolveReport report;
  auto pa_res = problem_array(prob);
  if (!pa_res.slices_valid) {
    report.status = SolveStatus::NotGeneric;
    report.diagnostic = "slice extraction failed: " + pa_res.diagnostic;
    return report;
  }
  const int n = prob.n;
  if (!(pa_res.slices[n - 1] == transverse_array(n, prob.d()))) {
    report.status = SolveStatus::EmptyByCriterion;
    report.diagnostic = "top slice differs from the transverse array";
    return report;
  }

  auto skeleton = skeleton_vectors(flags);  // throws DegenerateFlags

  Ctx ctx;
  ctx.n = n;
  ctx.d = prob.d();
  ctx.slices = pa_res.slices;
  for (const auto& s : ctx.slices) ctx.slice_rank.push_back(rank_table_of(s));
  Position x = first_position(n, ctx.d);
  do {
    if (std::accumulate(x.begin(), x.end(), 0) > (ctx.d - 1) * n)
      ctx.region.push_back(x);
  } while (next_position(x, n));
  ctx.report = &report;

  Branch root;
  for (const auto& [pos, v] : skeleton) {
    Vec vec;
    for (const auto& c : v) vec.push_back(MultiPoly::constant(FieldElement(c)));
    root.store[pos] = std::move(vec);
  }

  try {
    solve_level(ctx, root, n - 1);
    report.status = SolveStatus::Complete;
  } catch (const NotGeneric& e) {
    report.status = SolveStatus::NotGeneric;
    report.diagnostic = e.what();
    report.solutions.clear();
    report.solution_count = 0;
  } catch (const BranchDead& e) {
    report.status = SolveStatus::NotGeneric;
    report.diagnostic = e.reason;
    report.solutions.clear();
    report.solution_count = 0;
  } catch (const UnsupportedAlgebra& e) {
    report.status = SolveStatus::UnsupportedAlgebra;
    report.diagnostic = e.what();
    report.solutions.clear();
    report.solution_count = 0;
  } catch (const TowerHeightExceeded& e) {
    report.status = SolveStatus::UnsupportedAlgebra;
    report.diagnostic = e.what();
    report.solutions.clear();
    report.solution_count = 0;
  }
  return report;
}

bool verify_solution(const SolutionFlag& sol, const SchubertProblem& prob,
                     const std::vector<QFlag>& flags) {
  const int n = prob.n;
  if (sol.n() != n || static_cast<int>(flags.size()) != prob.d()) return false;
  for (int a = 0; a < prob.d(); ++a) {
    const Permutation& w = prob.conditions[a];
    for (int i = 1; i <= n; ++i) {
      Matrix<FieldElement> e_prefix;
      for (int r = 0; r < i; ++r) {
        std::vector<FieldElement> row;
        for (const auto& c : flags[a].basis[r]) row.push_back(FieldElement(c));
        e_prefix.push_back(std::move(row));
      }
      for (int j = 1; j <= n; ++j) {
        int dim = intersection_dim<FieldElement>(
            {e_prefix, sol.levels[j - 1]}, n);
        if (dim < rank_wij(w, i, j)) return false;
      }
    }
  }
  return true;
}

std::vector<QFlag> random_flags(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> U(-9, 9);
  Permutation id = Permutation::identity(n);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<QFlag> flags;
    bool ok = true;
    for (int a = 0; a < d && ok; ++a) {
      Matrix<mpq_class> m(n, std::vector<mpq_class>(n));
      for (auto& row : m)
        for (auto& e : row) e = U(rng);
      if (rank_of(m) != n) {
        ok = false;
        break;
      }
      flags.push_back(QFlag{std::move(m)});
    }
    if (!ok) continue;
    for (int a = 0; a < d && ok; ++a)
      for (int b = a + 1; b < d && ok; ++b)
        if (!(relative_position(flags[a], flags[b]) == id)) ok = false;
    if (!ok) continue;
    try {
      skeleton_vectors(flags);
    } catch (const DegenerateFlags&) {
      continue;
    }
    return flags;
  }
  throw DegenerateFlags("no transverse flag set found for this seed");
}

CountResult count_solutions(const SchubertProblem& prob,
                            const std::vector<std::uint64_t>& seeds,
                            int jobs) {
  CountResult result;
  result.runs.resize(seeds.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1)) {
      CountRun run;
      run.seed = seeds[i];
      try {
        auto flags = random_flags(prob.n, prob.d(), seeds[i]);
        SolveReport rep = solve(prob, flags);
        run.status = rep.status;
        if (rep.status == SolveStatus::Complete ||
            rep.status == SolveStatus::EmptyByCriterion)
          run.count = rep.solution_count;
      } catch (const DegenerateFlags&) {
        run.status = SolveStatus::NotGeneric;
      }
      result.runs[i] = run;
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  std::map<long long, int> freq;
  for (const auto& run : result.runs)
    if (run.count >= 0) ++freq[run.count];
  int best = 0;
  for (const auto& [count, f] : freq)
    if (f > best) {
      best = f;
      result.modal_count = count;
    }
  return result;
}

SchubertProblem grassmannian_problem(
    const std::vector<std::vector<int>>& lambdas, int k, int n) {
  SchubertProblem prob;
  prob.n = n;
  int total = 0;
  for (const auto& lam : lambdas) {
    for (int part : lam) total += part;
    prob.conditions.push_back(
        partition_to_grassmannian_permutation(lam, k, n));
  }
  if (total != k * (n - k))
    throw LengthMismatch("partition sizes must fill dim G(k,n)");
  if (prob.conditions.empty())
    throw LengthMismatch("at least one partition is required");
  // Compose the longest element of S_k x S_{n-k} into the first condition:
  // it cuts each fiber of the projection to k-planes down to a single
  // complete flag, and the lengths add because a single-descent permutation
  // is the minimal representative of its coset.
  std::vector<int> line;
  for (int i = k; i >= 1; --i) line.push_back(i);
  for (int i = n; i >= k + 1; --i) line.push_back(i);
  prob.conditions[0] = prob.conditions[0].compose(Permutation(std::move(line)));
  return prob;
}

bool same_flag(const SolutionFlag& a, const SolutionFlag& b) {
  if (a.n() != b.n()) return false;
  try {
    for (int lvl = 0; lvl < a.n(); ++lvl) {
      if (a.levels[lvl].size() != b.levels[lvl].size()) return false;
      for (size_t r = 0; r < a.levels[lvl].size(); ++r)
        for (size_t c = 0; c < a.levels[lvl][r].size(); ++c)
          if (!(a.levels[lvl][r][c] == b.levels[lvl][r][c])) return false;
    }
  } catch (const FieldMismatch&) {
    return false;
  }
  return true;
}

std::vector<Matrix<FieldElement>> canonical_chain(const Matrix<mpq_class>& basis,
                                                  const TowerPtr& tower) {
  std::vector<Matrix<FieldElement>> out;
  const int n = static_cast<int>(basis.size());
  for (int lvl = 1; lvl <= n; ++lvl) {
    Matrix<FieldElement> m;
    for (int r = 0; r < lvl; ++r) {
      std::vector<FieldElement> row;
      for (const auto& c : basis[r])
        row.push_back(tower ? lift_to(FieldElement(c), tower)
                            : FieldElement(c));
      m.push_back(std::move(row));
    }
    rref(m);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace pa
