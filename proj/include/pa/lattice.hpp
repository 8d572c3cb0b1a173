#pragma once

// Positions in [n]^d under the dominance order, and finite dot arrays.
// Positions are 1-based throughout; dot arrays keep their dots sorted
// lexicographically so equality, hashing and serialization are canonical.

#include <algorithm>
#include <string>
#include <vector>

#include "pa/errors.hpp"

namespace pa {

using Position = std::vector<int>;  // coords, 1-based, length d

// x is dominated by y: x_i <= y_i for all i.
bool dominates(const Position& x, const Position& y);

// Coordinatewise maximum / minimum over a nonempty set.
Position join(const std::vector<Position>& r);
Position meet(const std::vector<Position>& r);

class DotArray {
 public:
  DotArray() = default;
  DotArray(int n, int d, std::vector<Position> dots);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Position>& dots() const { return dots_; }
  int size() const { return static_cast<int>(dots_.size()); }
  bool empty() const { return dots_.empty(); }

  bool contains(const Position& x) const;

  bool operator==(const DotArray& o) const {
    return n_ == o.n_ && d_ == o.d_ && dots_ == o.dots_;
  }

  std::string to_json() const;
  static DotArray from_json(const std::string& text);

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Position> dots_;  // sorted lex, duplicate-free
};

// P[y] = { x in P | x dominated by y }.
DotArray principal_subarray(const DotArray& p, const Position& y);

// Number of distinct values in coordinate `axis` (1-based) over all dots.
int rk_axis(const DotArray& p, int axis);

// Iteration over [n]^d in lexicographic order: first(n,d) starts at (1,..,1),
// next() advances with the last coordinate fastest; returns false past the end.
Position first_position(int n, int d);
bool next_position(Position& x, int n);

std::string position_to_string(const Position& x);

}  // namespace pa
