#pragma once

// Rankability, redundant/covered positions, permutation-array validation,
// and the conversion between rank tables and minimal dot arrays.

#include <optional>
#include <string>
#include <vector>

#include "pa/lattice.hpp"

namespace pa {

// Dense table of rk(P[x]) over [n]^d, stored in lexicographic order.
class RankTable {
 public:
  RankTable() = default;
  RankTable(int n, int d) : n_(n), d_(d), v_(size_of(n, d), 0) {}

  int n() const { return n_; }
  int d() const { return d_; }

  int at(const Position& x) const { return v_[index(x)]; }
  void set(const Position& x, int value) { v_[index(x)] = value; }

  // Value at x - e_axis (1-based axis); 0 when that pushes the coordinate to 0.
  int at_below(const Position& x, int axis) const;

  bool operator==(const RankTable& o) const {
    return n_ == o.n_ && d_ == o.d_ && v_ == o.v_;
  }

 private:
  static size_t size_of(int n, int d);
  size_t index(const Position& x) const;

  int n_ = 0, d_ = 0;
  std::vector<int> v_;
};

struct PermArrayCert {
  DotArray array;
  bool totally_rankable = false;
  bool no_redundant_dots = false;
  bool rank_is_n = false;
  std::string witness;  // set on failure: offending corner or dot

  bool ok() const { return totally_rankable && no_redundant_dots && rank_is_n; }
};

// Rank r when all d axis-ranks agree; empty arrays are rankable of rank 0.
std::optional<int> is_rankable(const DotArray& p);

// Condition (4): for dots y,z and axes i,j with y_i < z_i and y_j = z_j there
// is a dot x dominated by y v z with x_i = z_i and x_j < z_j.
bool is_totally_rankable(const DotArray& p);

// Brute-force definition (every principal subarray rankable); test oracle.
bool is_totally_rankable_bruteforce(const DotArray& p);

// Redundancy / covering with the subset search bounded by |S| <= d.
bool is_redundant(const Position& x, const DotArray& p);
bool is_covered(const Position& x, const DotArray& p);

// Unrestricted-subset-size variants; exponential, test oracles only.
bool is_redundant_exhaustive(const Position& x, const DotArray& p);
bool is_covered_exhaustive(const Position& x, const DotArray& p);

PermArrayCert is_permutation_array(const DotArray& p);

// Full table rk(P[x]); throws NotTotallyRankable when axis ranks disagree.
RankTable rank_table_of(const DotArray& p);

// The unique permutation-array representative of a totally rankable table.
DotArray minimal_array_of(const RankTable& t);

}  // namespace pa
