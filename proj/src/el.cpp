#include "pa/el.hpp"

namespace pa {

namespace {

bool comparable(const Position& x, const Position& y) {
  return dominates(x, y) || dominates(y, x);
}

void check_antichain(const DotArray& a) {
  const auto& dots = a.dots();
  for (size_t i = 0; i < dots.size(); ++i)
    for (size_t j = i + 1; j < dots.size(); ++j)
      if (comparable(dots[i], dots[j]))
        throw NotAntichain("dots " + position_to_string(dots[i]) + " and " +
                           position_to_string(dots[j]) + " are comparable");
}

}  // namespace

std::vector<Position> covered_positions(const DotArray& a) {
  check_antichain(a);
  std::vector<Position> out;
  if (a.empty()) return out;
  Position x = first_position(a.n(), a.d());
  do {
    if (is_covered(x, a)) out.push_back(x);
  } while (next_position(x, a.n()));
  return out;
}

DotArray downsize(const DotArray& a, const DotArray& p) {
  if (a.n() != p.n() || a.d() != p.d())
    throw DimensionMismatch("downsize: mismatched array shapes");
  for (const auto& x : a.dots())
    if (!p.contains(x))
      throw NotSubset("downsize: " + position_to_string(x) + " not in array");
  std::vector<Position> q2;
  for (const auto& x : p.dots())
    if (!a.contains(x)) q2.push_back(x);
  for (auto& x : covered_positions(a)) q2.push_back(std::move(x));
  DotArray q(p.n(), p.d(), std::move(q2));
  std::vector<Position> kept;
  for (const auto& x : q.dots())
    if (!is_redundant(x, q)) kept.push_back(x);
  return DotArray(p.n(), p.d(), std::move(kept));
}

bool is_successful(const DotArray& a, const DotArray& p) {
  DotArray down = downsize(a, p);
  auto rp = is_rankable(p);
  if (!rp) return false;
  if (!is_totally_rankable(down)) return false;
  auto rd = is_rankable(down);
  return rd && *rd == *rp - 1;
}

std::vector<DotArray> antichains(const DotArray& p) {
  std::vector<DotArray> out;
  const auto& dots = p.dots();
  std::vector<Position> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    out.emplace_back(p.n(), p.d(), cur);
    for (size_t i = from; i < dots.size(); ++i) {
      bool ok = true;
      for (const auto& y : cur)
        if (comparable(y, dots[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(dots[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

DotArray remove_covered(DotArray q) {
  bool removed = true;
  while (removed) {
    removed = false;
    for (const auto& y : q.dots()) {
      if (is_covered(y, q)) {
        std::vector<Position> rest;
        for (const auto& z : q.dots())
          if (z != y) rest.push_back(z);
        q = DotArray(q.n(), q.d(), std::move(rest));
        removed = true;
        break;
      }
    }
  }
  return q;
}

namespace {

// Depth-first walk over antichain choices from level i down to 1,
// collecting the chosen antichains; emits the assembled array at level 1.
bool descend(int n, int d, const DotArray& pi, int level,
             std::vector<DotArray>& chosen,
             const std::function<bool(const DotArray&)>& emit) {
  if (level == 1) {
    std::vector<Position> dots;
    chosen.push_back(pi);  // A_1 = P_1
    for (size_t k = 0; k < chosen.size(); ++k) {
      int slice = level + static_cast<int>(chosen.size()) - 1 - static_cast<int>(k);
      for (const auto& x : chosen[k].dots()) {
        Position y = x;
        y.push_back(slice);
        dots.push_back(std::move(y));
      }
    }
    chosen.pop_back();
    return emit(DotArray(n, d, std::move(dots)));
  }
  for (const auto& a : antichains(pi)) {
    if (a.empty()) continue;
    DotArray down = downsize(a, pi);
    if (!is_totally_rankable(down)) continue;
    auto r = is_rankable(down);
    if (!r || *r != level - 1) continue;
    chosen.push_back(a);
    bool go_on = descend(n, d, down, level - 1, chosen, emit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool enumerate_permutation_arrays(
    int n, int d, const std::function<bool(const DotArray&)>& emit) {
  if (n < 1 || d < 1) throw Error("enumerate: n and d must be positive");
  if (d == 1) {
    std::vector<Position> dots;
    for (int k = 1; k <= n; ++k) dots.push_back({k});
    return emit(DotArray(n, 1, std::move(dots)));
  }
  return enumerate_permutation_arrays(n, d - 1, [&](const DotArray& pn) {
    std::vector<DotArray> chosen;
    return descend(n, d, pn, n, chosen, emit);
  });
}

std::vector<DotArray> slice_sequence(const DotArray& p) {
  auto cert = is_permutation_array(p);
  if (!cert.ok())
    throw NotPermutationArray("slice_sequence: " + cert.witness);
  const int n = p.n(), d = p.d() - 1;
  if (d < 1) throw DimensionMismatch("slice_sequence: need d >= 2");
  std::vector<DotArray> slices;
  for (int i = 1; i <= n; ++i) {
    std::vector<Position> proj;
    for (const auto& x : p.dots()) {
      if (x.back() > i) continue;
      proj.emplace_back(x.begin(), x.end() - 1);
    }
    slices.push_back(remove_covered(DotArray(n, d, std::move(proj))));
  }
  return slices;
}

DotArray assemble_from_slices(const std::vector<DotArray>& slices) {
  if (slices.empty()) throw Error("assemble_from_slices: no slices");
  const int n = slices.front().n(), d = slices.front().d();
  std::vector<Position> dots;
  for (size_t i = 0; i < slices.size(); ++i) {
    for (const auto& x : slices[i].dots()) {
      if (i > 0 && slices[i - 1].contains(x)) continue;
      Position y = x;
      y.push_back(static_cast<int>(i) + 1);
      dots.push_back(std::move(y));
    }
  }
  return DotArray(n, d + 1, std::move(dots));
}

}  // namespace pa
