#include "pa/lattice.hpp"

#include <sstream>

#include "json.hpp"

namespace pa {

bool dominates(const Position& x, const Position& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("dominates: positions of different dimension");
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Position join(const std::vector<Position>& r) {
  if (r.empty()) throw Error("join of empty set");
  Position z = r.front();
  for (const auto& x : r) {
    if (x.size() != z.size())
      throw DimensionMismatch("join: positions of different dimension");
    for (size_t i = 0; i < z.size(); ++i) z[i] = std::max(z[i], x[i]);
  }
  return z;
}

Position meet(const std::vector<Position>& r) {
  if (r.empty()) throw Error("meet of empty set");
  Position z = r.front();
  for (const auto& x : r) {
    if (x.size() != z.size())
      throw DimensionMismatch("meet: positions of different dimension");
    for (size_t i = 0; i < z.size(); ++i) z[i] = std::min(z[i], x[i]);
  }
  return z;
}

DotArray::DotArray(int n, int d, std::vector<Position> dots)
    : n_(n), d_(d), dots_(std::move(dots)) {
  if (n_ < 1 || d_ < 1) throw Error("DotArray: n and d must be positive");
  for (const auto& x : dots_) {
    if (static_cast<int>(x.size()) != d_)
      throw DimensionMismatch("DotArray: dot of wrong dimension");
    for (int c : x)
      if (c < 1 || c > n_) throw Error("DotArray: coordinate out of [1,n]");
  }
  std::sort(dots_.begin(), dots_.end());
  dots_.erase(std::unique(dots_.begin(), dots_.end()), dots_.end());
}

bool DotArray::contains(const Position& x) const {
  return std::binary_search(dots_.begin(), dots_.end(), x);
}

std::string DotArray::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["d"] = d_;
  j["dots"] = dots_;
  return j.dump();
}

DotArray DotArray::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return DotArray(j.at("n").get<int>(), j.at("d").get<int>(),
                  j.at("dots").get<std::vector<Position>>());
}

DotArray principal_subarray(const DotArray& p, const Position& y) {
  if (static_cast<int>(y.size()) != p.d())
    throw DimensionMismatch("principal_subarray: corner of wrong dimension");
  std::vector<Position> kept;
  for (const auto& x : p.dots())
    if (dominates(x, y)) kept.push_back(x);
  return DotArray(p.n(), p.d(), std::move(kept));
}

int rk_axis(const DotArray& p, int axis) {
  if (axis < 1 || axis > p.d()) throw Error("rk_axis: axis out of range");
  std::vector<char> seen(p.n() + 1, 0);
  int count = 0;
  for (const auto& x : p.dots()) {
    int v = x[axis - 1];
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  }
  return count;
}

Position first_position(int n, int d) {
  (void)n;
  return Position(d, 1);
}

bool next_position(Position& x, int n) {
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (x[i] < n) {
      ++x[i];
      std::fill(x.begin() + i + 1, x.end(), 1);
      return true;
    }
  }
  return false;
}

std::string position_to_string(const Position& x) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << ')';
  return os.str();
}

}  // namespace pa
