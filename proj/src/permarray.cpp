#include "pa/permarray.hpp"

#include <cstdint>

namespace pa {

size_t RankTable::size_of(int n, int d) {
  size_t s = 1;
  for (int i = 0; i < d; ++i) s *= static_cast<size_t>(n);
  return s;
}

size_t RankTable::index(const Position& x) const {
  if (static_cast<int>(x.size()) != d_)
    throw DimensionMismatch("RankTable: position of wrong dimension");
  size_t idx = 0;
  for (int c : x) {
    if (c < 1 || c > n_) throw Error("RankTable: coordinate out of [1,n]");
    idx = idx * n_ + (c - 1);
  }
  return idx;
}

int RankTable::at_below(const Position& x, int axis) const {
  if (x[axis - 1] == 1) return 0;
  Position y = x;
  --y[axis - 1];
  return at(y);
}

std::optional<int> is_rankable(const DotArray& p) {
  int r = rk_axis(p, 1);
  for (int j = 2; j <= p.d(); ++j)
    if (rk_axis(p, j) != r) return std::nullopt;
  return r;
}

bool is_totally_rankable(const DotArray& p) {
  const auto& dots = p.dots();
  const int d = p.d();
  for (const auto& y : dots) {
    for (const auto& z : dots) {
      for (int i = 0; i < d; ++i) {
        if (y[i] >= z[i]) continue;
        for (int j = 0; j < d; ++j) {
          if (j == i || y[j] != z[j]) continue;
          // need some dot x <= y v z with x_i = z_i and x_j < z_j
          bool found = false;
          for (const auto& x : dots) {
            if (x[i] != z[i] || x[j] >= z[j]) continue;
            bool below = true;
            for (int k = 0; k < d; ++k)
              if (x[k] > std::max(y[k], z[k])) {
                below = false;
                break;
              }
            if (below) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
    }
  }
  return true;
}

bool is_totally_rankable_bruteforce(const DotArray& p) {
  Position x = first_position(p.n(), p.d());
  do {
    if (!is_rankable(principal_subarray(p, x))) return false;
  } while (next_position(x, p.n()));
  return true;
}

namespace {

// Dots of p strictly below-or-equal x that share at least one coordinate
// with x; every member of a witness set must be of this form.
std::vector<Position> witness_candidates(const Position& x, const DotArray& p,
                                         bool exclude_x) {
  std::vector<Position> out;
  for (const auto& y : p.dots()) {
    if (!dominates(y, x)) continue;
    if (exclude_x && y == x) continue;
    bool shares = false;
    for (size_t i = 0; i < x.size(); ++i)
      if (y[i] == x[i]) {
        shares = true;
        break;
      }
    if (shares) out.push_back(y);
  }
  return out;
}

// Depth-first search for a witness set of size <= budget.  `unattained` and
// `undropped` are axis bitmasks; attaining means matching the coordinate of
// x, dropping means being strictly below it.  For redundancy witnesses
// `undropped` starts at 0.  Each pick attains a previously unattained axis
// (or drops a previously undropped one), so a valid witness of size <= d is
// always reachable in this order.
bool witness_dfs(const Position& x, const std::vector<Position>& cand,
                 std::vector<char>& used, uint32_t unattained,
                 uint32_t undropped, int budget, int picked) {
  if (unattained == 0 && undropped == 0) return picked >= 2;
  if (budget == 0) return false;
  const int d = static_cast<int>(x.size());
  int axis = -1;
  bool attaining = unattained != 0;
  for (int j = 0; j < d; ++j) {
    uint32_t bit = 1u << j;
    if (attaining ? (unattained & bit) : (undropped & bit)) {
      axis = j;
      break;
    }
  }
  for (size_t c = 0; c < cand.size(); ++c) {
    if (used[c]) continue;
    const Position& y = cand[c];
    if (attaining ? (y[axis] != x[axis]) : (y[axis] >= x[axis])) continue;
    uint32_t na = unattained, nd = undropped;
    for (int j = 0; j < d; ++j) {
      if (y[j] == x[j]) na &= ~(1u << j);
      if (y[j] < x[j]) nd &= ~(1u << j);
    }
    used[c] = 1;
    if (witness_dfs(x, cand, used, na, nd, budget - 1, picked + 1)) {
      used[c] = 0;
      return true;
    }
    used[c] = 0;
  }
  return false;
}

bool witness_exhaustive(const Position& x, const std::vector<Position>& cand,
                        std::vector<size_t>& chosen, size_t from,
                        bool require_drops) {
  if (chosen.size() >= 2) {
    const int d = static_cast<int>(x.size());
    bool ok = true;
    for (int j = 0; j < d && ok; ++j) {
      bool attained = false, dropped = false;
      for (size_t c : chosen) {
        if (cand[c][j] == x[j]) attained = true;
        if (cand[c][j] < x[j]) dropped = true;
      }
      ok = attained && (!require_drops || dropped);
    }
    if (ok) return true;
  }
  for (size_t c = from; c < cand.size(); ++c) {
    chosen.push_back(c);
    if (witness_exhaustive(x, cand, chosen, c + 1, require_drops)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool is_redundant(const Position& x, const DotArray& p) {
  auto cand = witness_candidates(x, p, /*exclude_x=*/true);
  if (p.contains(x) && !cand.empty()) return true;  // R = {x, anything below}
  std::vector<char> used(cand.size(), 0);
  uint32_t all = (1u << p.d()) - 1;
  return witness_dfs(x, cand, used, all, 0, p.d(), 0);
}

bool is_covered(const Position& x, const DotArray& p) {
  auto cand = witness_candidates(x, p, /*exclude_x=*/true);
  std::vector<char> used(cand.size(), 0);
  uint32_t all = (1u << p.d()) - 1;
  return witness_dfs(x, cand, used, all, all, p.d(), 0);
}

bool is_redundant_exhaustive(const Position& x, const DotArray& p) {
  auto cand = witness_candidates(x, p, /*exclude_x=*/false);
  std::vector<size_t> chosen;
  return witness_exhaustive(x, cand, chosen, 0, /*require_drops=*/false);
}

bool is_covered_exhaustive(const Position& x, const DotArray& p) {
  auto cand = witness_candidates(x, p, /*exclude_x=*/true);
  std::vector<size_t> chosen;
  return witness_exhaustive(x, cand, chosen, 0, /*require_drops=*/true);
}

PermArrayCert is_permutation_array(const DotArray& p) {
  PermArrayCert cert;
  cert.array = p;
  cert.totally_rankable = is_totally_rankable(p);
  if (!cert.totally_rankable) {
    cert.witness = "not totally rankable";
    return cert;
  }
  auto r = is_rankable(p);
  cert.rank_is_n = r.has_value() && *r == p.n();
  if (!cert.rank_is_n) {
    cert.witness = "rank is not n";
    return cert;
  }
  cert.no_redundant_dots = true;
  for (const auto& x : p.dots()) {
    if (is_redundant(x, p)) {
      cert.no_redundant_dots = false;
      cert.witness = "redundant dot at " + position_to_string(x);
      return cert;
    }
  }
  return cert;
}

RankTable rank_table_of(const DotArray& p) {
  const int n = p.n(), d = p.d();
  RankTable t(n, d);
  Position x = first_position(n, d);
  std::vector<uint32_t> mask(d);
  do {
    std::fill(mask.begin(), mask.end(), 0u);
    for (const auto& y : p.dots()) {
      bool below = true;
      for (int j = 0; j < d; ++j)
        if (y[j] > x[j]) {
          below = false;
          break;
        }
      if (below)
        for (int j = 0; j < d; ++j) mask[j] |= 1u << y[j];
    }
    int r = __builtin_popcount(mask[0]);
    for (int j = 1; j < d; ++j)
      if (__builtin_popcount(mask[j]) != r)
        throw NotTotallyRankable("axis ranks disagree at " +
                                 position_to_string(x));
    t.set(x, r);
  } while (next_position(x, n));
  return t;
}

DotArray minimal_array_of(const RankTable& t) {
  const int n = t.n(), d = t.d();
  std::vector<Position> cand;
  Position x = first_position(n, d);
  do {
    bool jumps = true;
    for (int j = 1; j <= d && jumps; ++j)
      jumps = t.at(x) > t.at_below(x, j);
    if (jumps) cand.push_back(x);
  } while (next_position(x, n));

  DotArray q(n, d, std::move(cand));
  bool removed = true;
  while (removed) {
    removed = false;
    for (const auto& y : q.dots()) {
      if (is_covered(y, q)) {
        std::vector<Position> rest;
        for (const auto& z : q.dots())
          if (z != y) rest.push_back(z);
        q = DotArray(n, d, std::move(rest));
        removed = true;
        break;
      }
    }
  }
  if (!(rank_table_of(q) == t))
    throw Inconsistent("table is not realized by a dot array");
  return q;
}

}  // namespace pa
