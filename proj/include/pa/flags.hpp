#pragma once

// Complete flags over an exact field and the dot-array / permutation data
// extracted from their intersection dimensions.

#include "pa/matrix.hpp"
#include "pa/perm.hpp"
#include "pa/permarray.hpp"

namespace pa {

// A flag is an ordered basis; F_i is the span of the first i rows.
template <class K>
struct Flag {
  Matrix<K> basis;

  int n() const { return static_cast<int>(basis.size()); }

  Matrix<K> prefix(int i) const {
    if (i < 0 || i > n()) throw DimensionMismatch("Flag: bad prefix length");
    return Matrix<K>(basis.begin(), basis.begin() + i);
  }
};

template <class K>
void validate_flag(const Flag<K>& f) {
  if (f.basis.empty()) throw DimensionMismatch("Flag: empty basis");
  for (const auto& row : f.basis)
    if (static_cast<int>(row.size()) != f.n())
      throw DimensionMismatch("Flag: basis is not square");
  if (rank_of(f.basis) != f.n()) throw DegenerateFlags("Flag: basis is singular");
}

// dim(F_i ^ G_j) for all i, j, as an (n+1)x(n+1) table (index 0 = trivial).
template <class K>
std::vector<std::vector<int>> intersection_table(const Flag<K>& f,
                                                 const Flag<K>& g) {
  if (f.n() != g.n()) throw DimensionMismatch("flags of different rank");
  const int n = f.n();
  std::vector<std::vector<int>> dims(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      dims[i][j] = intersection_dim<K>({f.prefix(i), g.prefix(j)}, n);
  return dims;
}

// The unique permutation w with dim(F_i ^ G_j) = rank of the (i,j) corner
// submatrix of matrix(w).
template <class K>
Permutation relative_position(const Flag<K>& f, const Flag<K>& g) {
  validate_flag(f);
  validate_flag(g);
  auto dims = intersection_table(f, g);
  const int n = f.n();
  std::vector<int> w(n, 0);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      int second_diff =
          dims[r][c] - dims[r - 1][c] - dims[r][c - 1] + dims[r - 1][c - 1];
      if (second_diff == 1) {
        int k = n - c + 1;  // the 1 of column c belongs to position k
        if (w[k - 1] != 0) throw Error("relative_position: invalid table");
        w[k - 1] = r;
      } else if (second_diff != 0) {
        throw Error("relative_position: invalid table");
      }
    }
  Permutation result(w);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rank_wij(result, i, j) != dims[i][j])
        throw Error("relative_position: table does not match any permutation");
  return result;
}

// Full rank table dim(E^1_{x_1} ^ ... ^ E^d_{x_d}) over [n]^d.
template <class K>
RankTable flags_rank_table(const std::vector<Flag<K>>& flags) {
  if (flags.empty()) throw DimensionMismatch("need at least one flag");
  const int n = flags[0].n();
  const int d = static_cast<int>(flags.size());
  for (const auto& f : flags) {
    validate_flag(f);
    if (f.n() != n) throw DimensionMismatch("flags of different rank");
  }
  // complement bases of every prefix, reused across lattice points
  std::vector<std::vector<Matrix<K>>> comp(d);
  for (int a = 0; a < d; ++a) {
    comp[a].resize(n + 1);
    for (int i = 1; i <= n; ++i)
      comp[a][i] = complement_basis(flags[a].prefix(i), n);
  }
  RankTable t(n, d);
  Position x = first_position(n, d);
  do {
    Matrix<K> stacked;
    for (int a = 0; a < d; ++a)
      for (const auto& row : comp[a][x[a]]) stacked.push_back(row);
    t.set(x, stacked.empty() ? n : n - rank_of(stacked));
  } while (next_position(x, n));
  return t;
}

// The permutation array describing all intersection dimensions of the flags.
template <class K>
DotArray flags_to_permarray(const std::vector<Flag<K>>& flags) {
  return minimal_array_of(flags_rank_table(flags));
}

}  // namespace pa
