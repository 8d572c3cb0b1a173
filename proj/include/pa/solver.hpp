#pragma once

// Exact solver for zero-dimensional intersections of Schubert varieties:
// skeleton vectors from the transverse array, indeterminate combinations
// level by level, determinantal rank conditions in lexicographic order,
// and branching over irreducible factors of univariate conditions.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pa/algebra.hpp"
#include "pa/flags.hpp"
#include "pa/problem.hpp"
#include "pa/unipoly.hpp"

namespace pa {

using QFlag = Flag<mpq_class>;

// One spanning vector per dot of the transverse array, computed by exact
// nullspace; normalized so the first nonzero coordinate is positive and
// denominators are cleared.  Throws DegenerateFlags when some intersection
// is not a line.
std::map<Position, std::vector<mpq_class>> skeleton_vectors(
    const std::vector<QFlag>& flags);

enum class SolveStatus { Complete, NotGeneric, UnsupportedAlgebra, EmptyByCriterion };

std::string to_string(SolveStatus s);

struct SolutionFlag {
  TowerPtr tower;
  // levels[i]: canonical reduced-echelon basis of the (i+1)-dimensional
  // subspace, so flags compare as subspace chains.
  std::vector<Matrix<FieldElement>> levels;
  // conjugate solutions represented by this flag but not emitted
  // explicitly (roots of branch polynomials outside the tower)
  long long conjugates = 1;
  std::vector<std::string> provenance;

  int n() const { return static_cast<int>(levels.size()); }
};

struct SolveReport {
  SolveStatus status = SolveStatus::Complete;
  std::vector<SolutionFlag> solutions;
  long long solution_count = 0;  // sum of conjugates over all solutions
  // branch polynomials of degree >= 2 factored over the rationals
  std::vector<UniPoly> rational_branch_polys;
  std::vector<std::string> log;
  std::string diagnostic;
};

SolveReport solve(const SchubertProblem& prob, const std::vector<QFlag>& flags);

// Every rank inequality of every condition, checked by exact rank over the
// solution's tower.
bool verify_solution(const SolutionFlag& sol, const SchubertProblem& prob,
                     const std::vector<QFlag>& flags);

// Deterministic random flags for a given seed: integer entries in [-9, 9],
// rejection-resampled until invertible, pairwise transverse, and with a
// nondegenerate skeleton.
std::vector<QFlag> random_flags(int n, int d, std::uint64_t seed);

struct CountRun {
  std::uint64_t seed = 0;
  SolveStatus status = SolveStatus::Complete;
  long long count = -1;  // -1 when not Complete
};

struct CountResult {
  std::vector<CountRun> runs;
  long long modal_count = -1;  // most frequent Complete count, -1 if none
};

CountResult count_solutions(const SchubertProblem& prob,
                            const std::vector<std::uint64_t>& seeds,
                            int jobs = 1);

// A Schubert problem on k-planes, phrased on complete flags: one
// single-descent condition per partition plus the longest element of the
// block subgroup S_k x S_{n-k}, which cuts each fiber of the projection to
// a point.  The partitions must fill dim G(k,n) exactly.
SchubertProblem grassmannian_problem(
    const std::vector<std::vector<int>>& lambdas, int k, int n);

// Flags as a chain comparison.
bool same_flag(const SolutionFlag& a, const SolutionFlag& b);

// Canonical chain of a rational flag lifted into a tower (for comparing a
// solution against an expected flag).
std::vector<Matrix<FieldElement>> canonical_chain(const Matrix<mpq_class>& basis,
                                                  const TowerPtr& tower);

}  // namespace pa
