#pragma once

// Schubert problems on the complete flag manifold: the transverse array,
// the intersection-dimension recurrence filling the full (d+1)-flag rank
// table, the vanishing criterion, and the Grassmannian condition wrapper.

#include <string>
#include <vector>

#include "pa/el.hpp"
#include "pa/perm.hpp"
#include "pa/permarray.hpp"

namespace pa {

struct SchubertProblem {
  int n = 0;
  std::vector<Permutation> conditions;  // w^1..w^d

  int d() const { return static_cast<int>(conditions.size()); }
  int total_length() const;
  bool zero_dimensional() const;  // sum of lengths = n(n-1)/2
};

// T_{n,d}: the dots of [n]^d with coordinate sum (d-1)n + 1.
DotArray transverse_array(int n, int d);

struct ProblemArrayResult {
  RankTable table;               // full table over [n]^{d+1}; last axis is F_j
  DotArray parent;               // minimal array of the table, when realizable
  bool parent_valid = false;     // parent passes is_permutation_array
  std::vector<DotArray> slices;  // per-level minimal arrays P_1..P_n
  bool slices_valid = false;
  std::string diagnostic;
};

// Fill dim(E^{s_1}_{x_{s_1}} ^ ... ^ F_j) by the two-branch max recurrence,
// seeded from the rank tables of the conditions.
ProblemArrayResult problem_array(const SchubertProblem& prob);

// True (the intersection is certifiably empty) iff the top slice differs
// from the transverse array; throws LengthMismatch unless zero-dimensional.
bool vanishing_criterion(const SchubertProblem& prob);

// The unique permutation with ell(w) = |lambda| and at most one descent,
// located at k; lambda must fit in the k x (n-k) box.
Permutation partition_to_grassmannian_permutation(const std::vector<int>& lambda,
                                                  int k, int n);

}  // namespace pa
