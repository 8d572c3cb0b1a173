#pragma once

// The downsizing operator, the recursive enumeration of permutation arrays,
// and the slice sequence of a (d+1)-dimensional permutation array.

#include <functional>
#include <vector>

#include "pa/permarray.hpp"

namespace pa {

// All positions of [n]^d covered by dots of a (checked pairwise-incomparable).
std::vector<Position> covered_positions(const DotArray& a);

// Q1 = P \ A; Q2 = Q1 u C(A); result = Q2 minus its redundant positions.
DotArray downsize(const DotArray& a, const DotArray& p);

// True iff downsize(a, p) is totally rankable of rank rk(p) - 1.
bool is_successful(const DotArray& a, const DotArray& p);

// All antichains of the dots of p (the empty one included).
std::vector<DotArray> antichains(const DotArray& p);

// Repeatedly delete covered dots (lexicographically first each pass).
DotArray remove_covered(DotArray q);

// Emits every [n]^d permutation array exactly once, depth first over the
// (P_n, antichain) choices.  The callback returns false to stop early;
// the function returns false iff stopped.
bool enumerate_permutation_arrays(
    int n, int d, const std::function<bool(const DotArray&)>& emit);

// P_i = minimal array of { (x_1..x_d) : (x, k) in P, k <= i }, for i = 1..n.
std::vector<DotArray> slice_sequence(const DotArray& p);

// Inverse of slice_sequence: parent dots are (x, i) for x in P_i \ P_{i-1}.
DotArray assemble_from_slices(const std::vector<DotArray>& slices);

}  // namespace pa
