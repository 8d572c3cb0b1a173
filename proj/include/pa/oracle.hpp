#pragma once

// Independent cohomological oracle: Schubert polynomials by divided
// differences, structure constants by basis expansion of products, and a
// whole-group scan comparing the geometric vanishing criterion against the
// exact coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pa/perm.hpp"

namespace pa {

// Exponent vectors are fixed-length (nvars); the significant end is the
// highest variable index, so the map's last key is the leading monomial.
struct ExpLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};
using Poly = std::map<std::vector<int>, long long, ExpLess>;

// The Schubert polynomial of w inside S_m (w is padded with fixed points);
// exponent vectors have length m (the last slot is 0 in any final result).
// Results are memoized per m.
Poly schubert_polynomial(const Permutation& w, int m);

// Divided difference (f - s_i f) / (x_i - x_{i+1}), 1-based i <= m - 1.
Poly divided_difference(const Poly& f, int i);

Poly poly_mul(const Poly& a, const Poly& b);

// Expand a homogeneous polynomial in the Schubert basis of S_m by repeated
// subtraction of the leading term's Schubert polynomial.
std::map<Permutation, long long> expand_in_basis(Poly f, int m);

// All structure constants c_{u,v}^w for w in S_n, computed inside S_{2n}.
std::map<Permutation, long long> structure_constants(const Permutation& u,
                                                     const Permutation& v);

// The single coefficient; 0 when the grading fails.
long long structure_constant(const Permutation& u, const Permutation& v,
                             const Permutation& w);

struct ZeroScan {
  long long caught = 0;  // zeros detected by the vanishing criterion
  long long zeros = 0;   // vanishing structure constants
  long long total = 0;   // graded triples scanned (unordered in {u, v})
  long long unsound = 0; // criterion fired on a nonzero constant (must be 0)
};

// Scan all triples (u, v, w) with u <= v and l(u) + l(v) = l(w); counts how
// many vanishing constants the criterion certifies.  An optional cache file
// makes long runs restartable; jobs > 1 parallelizes over pairs.
ZeroScan zero_scan(int n, const std::string& cache_file = "", int jobs = 1);

}  // namespace pa
