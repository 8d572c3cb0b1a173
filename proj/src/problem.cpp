#include "pa/problem.hpp"

#include <algorithm>
#include <numeric>

namespace pa {

int SchubertProblem::total_length() const {
  int s = 0;
  for (const auto& w : conditions) s += w.length();
  return s;
}

bool SchubertProblem::zero_dimensional() const {
  return total_length() == n * (n - 1) / 2;
}

DotArray transverse_array(int n, int d) {
  std::vector<Position> dots;
  Position x = first_position(n, d);
  do {
    if (std::accumulate(x.begin(), x.end(), 0) == (d - 1) * n + 1)
      dots.push_back(x);
  } while (next_position(x, n));
  return DotArray(n, d, std::move(dots));
}

namespace {

// Dimension tables D[mask](x, j) = dim(^_{a in mask} E^a_{x_a} ^ F_j) for
// coordinates x_a in [1, n-1] and j in [0, n]; coordinates equal to n drop
// out of the subset.  Flat storage, x varying over (n-1)^k, j fastest.
class Recurrence {
 public:
  explicit Recurrence(const SchubertProblem& prob)
      : n_(prob.n), d_(prob.d()), tables_(size_t{1} << d_) {
    for (int mask = 1; mask < (1 << d_); ++mask) fill(mask, prob);
  }

  // x is a full position in [n]^d; j in [0, n].
  int value(const Position& x, int j) const {
    int mask = 0;
    size_t idx = 0;
    for (int a = 0; a < d_; ++a) {
      if (x[a] < n_) {
        mask |= 1 << a;
        idx = idx * (n_ - 1) + (x[a] - 1);
      }
    }
    if (mask == 0) return j;
    return tables_[mask][idx * (n_ + 1) + j];
  }

 private:
  void fill(int mask, const SchubertProblem& prob) {
    const int k = __builtin_popcount(mask);
    size_t cells = 1;
    for (int i = 0; i < k; ++i) cells *= static_cast<size_t>(n_ - 1);
    std::vector<int>& t = tables_[mask];
    t.assign(cells * (n_ + 1), 0);

    const int s1 = __builtin_ctz(mask);
    const int rest = mask & (mask - 1);  // mask without its lowest axis
    std::vector<int> x(k, 1);            // coordinates in [1, n-1]
    size_t idx = 0;
    do {
      for (int j = 1; j <= n_; ++j) {
        int v;
        if (k == 1) {
          v = rank_wij(prob.conditions[s1], x[0], j);
        } else {
          // strip the first coordinate and look up the remaining subset
          size_t rest_idx = 0;
          for (int i = 1; i < k; ++i) rest_idx = rest_idx * (n_ - 1) + (x[i] - 1);
          int cut = rank_wij(prob.conditions[s1], x[0], j) +
                    tables_[rest][rest_idx * (n_ + 1) + j] - j;
          int stay = t[idx * (n_ + 1) + j - 1];
          v = std::max(cut, stay);
        }
        t[idx * (n_ + 1) + j] = v;
      }
      ++idx;
    } while (advance(x));
  }

  bool advance(std::vector<int>& x) const {
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
      if (x[i] < n_ - 1) {
        ++x[i];
        std::fill(x.begin() + i + 1, x.end(), 1);
        return true;
      }
    }
    return false;
  }

  int n_, d_;
  std::vector<std::vector<int>> tables_;
};

RankTable level_table(const Recurrence& rec, int n, int d, int level) {
  RankTable t(n, d);
  Position x = first_position(n, d);
  do t.set(x, rec.value(x, level));
  while (next_position(x, n));
  return t;
}

}  // namespace pa-internal

ProblemArrayResult problem_array(const SchubertProblem& prob) {
  const int n = prob.n, d = prob.d();
  if (d < 1) throw DimensionMismatch("problem_array: no conditions");
  for (const auto& w : prob.conditions)
    if (w.n() != n) throw LengthMismatch("problem_array: condition size != n");

  Recurrence rec(prob);
  ProblemArrayResult out;

  out.table = RankTable(n, d + 1);
  Position y = first_position(n, d + 1);
  do {
    Position x(y.begin(), y.end() - 1);
    out.table.set(y, rec.value(x, y.back()));
  } while (next_position(y, n));

  out.slices_valid = true;
  for (int i = 1; i <= n; ++i) {
    try {
      out.slices.push_back(minimal_array_of(level_table(rec, n, d, i)));
    } catch (const Error& e) {
      out.slices.emplace_back();
      out.slices_valid = false;
      out.diagnostic = "level " + std::to_string(i) + ": " + e.what();
    }
  }

  try {
    out.parent = minimal_array_of(out.table);
    out.parent_valid = is_permutation_array(out.parent).ok();
    if (!out.parent_valid) out.diagnostic = "parent fails the certificate";
  } catch (const Error& e) {
    out.parent_valid = false;
    if (out.diagnostic.empty()) out.diagnostic = e.what();
  }
  return out;
}

bool vanishing_criterion(const SchubertProblem& prob) {
  if (!prob.zero_dimensional())
    throw LengthMismatch("vanishing_criterion: lengths must sum to n(n-1)/2");
  Recurrence rec(prob);
  RankTable top = level_table(rec, prob.n, prob.d(), prob.n);
  return !(top == rank_table_of(transverse_array(prob.n, prob.d())));
}

Permutation partition_to_grassmannian_permutation(const std::vector<int>& lambda,
                                                  int k, int n) {
  if (k < 1 || k > n) throw Error("grassmannian: k out of range");
  if (static_cast<int>(lambda.size()) > k)
    throw Error("grassmannian: more than k parts");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || lambda[i] > n - k)
      throw Error("grassmannian: part exceeds n-k");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw Error("grassmannian: parts must be weakly decreasing");
  }
  std::vector<int> padded(k, 0);
  for (size_t i = 0; i < lambda.size(); ++i) padded[i] = lambda[i];
  std::vector<int> w(n, 0);
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= k; ++i) {
    w[i - 1] = i + padded[k - i];
    used[w[i - 1]] = 1;
  }
  int next = 1;
  for (int i = k + 1; i <= n; ++i) {
    while (used[next]) ++next;
    w[i - 1] = next;
    used[next] = 1;
  }
  return Permutation(std::move(w));
}

}  // namespace pa
