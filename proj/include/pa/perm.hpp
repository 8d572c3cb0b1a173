#pragma once

// Permutations in one-line notation.  The associated 0/1 matrix puts the 1 of
// column n-i+1 in row w(i); all rank computations below follow that labeling.

#include <string>
#include <vector>

#include "pa/errors.hpp"

namespace pa {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0: i -> n+1-i

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return w_; }

  int length() const;  // inversion count
  Permutation inverse() const;
  Permutation compose(const Permutation& o) const;  // i -> this(o(i))

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  bool operator<(const Permutation& o) const { return w_ < o.w_; }

  // Digits for n <= 9 ("1324"), comma-separated otherwise ("10,1,2,...").
  std::string to_string() const;
  static Permutation parse(const std::string& text);

 private:
  std::vector<int> w_;
};

// Rank of the submatrix of matrix(w) with rows 1..i and columns 1..j;
// equals dim(F_i ^ G_j) when pos(F,G) = w.
int rank_wij(const Permutation& w, int i, int j);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

}  // namespace pa
