#include "pa/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pa {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > n() || seen[v])
      throw Error("Permutation: not a bijection on [n]");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(w_.size());
  for (int i = 1; i <= n(); ++i) v[w_[i - 1] - 1] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (n() != o.n()) throw LengthMismatch("compose: different symmetric groups");
  std::vector<int> v(w_.size());
  for (int i = 1; i <= n(); ++i) v[i - 1] = w_[o(i) - 1];
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n(); ++i) {
    if (n() > 9 && i) os << ',';
    os << w_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') throw Error("Permutation::parse: bad character");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

int rank_wij(const Permutation& w, int i, int j) {
  const int n = w.n();
  if (i < 1 || i > n || j < 1 || j > n)
    throw Error("rank_wij: index out of range");
  // the 1 of column n-k+1 lies in row w(k); columns 1..j come from k >= n-j+1
  int r = 0;
  for (int k = n - j + 1; k <= n; ++k)
    if (w(k) <= i) ++r;
  return r;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace pa
