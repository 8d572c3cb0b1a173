#include "pa/fano.hpp"

namespace pa {

namespace {

// Kuhn's augmenting-path matching on the 7x7 point-line incidence.
bool augment(int p, const std::vector<std::vector<int>>& lines_of,
             std::vector<int>& match_line, std::vector<char>& visited) {
  for (int l : lines_of[p]) {
    if (visited[l]) continue;
    visited[l] = 1;
    if (match_line[l] < 0 ||
        augment(match_line[l], lines_of, match_line, visited)) {
      match_line[l] = p;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Flag<GFp>> fano_flags() {
  GFp::set_modulus(2);
  // points: the 7 nonzero vectors of GF(2)^3, encoded 1..7 by bits
  auto vec = [](int code) {
    return std::vector<GFp>{GFp(code & 1), GFp(code >> 1 & 1), GFp(code >> 2 & 1)};
  };
  // lines: triples {a, b, a^b}; a line is the 2-dim subspace {0,a,b,a^b}
  std::vector<std::vector<int>> lines;
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      int c = a ^ b;
      if (c > b) lines.push_back({a, b, c});
    }
  // incidence: point p (1..7) lies on line l iff p is one of its three codes
  std::vector<std::vector<int>> lines_of(7);
  for (size_t l = 0; l < lines.size(); ++l)
    for (int p : lines[l]) lines_of[p - 1].push_back(static_cast<int>(l));

  std::vector<int> match_line(lines.size(), -1);
  for (int p = 0; p < 7; ++p) {
    std::vector<char> visited(lines.size(), 0);
    if (!augment(p, lines_of, match_line, visited))
      throw Inconsistent("fano: no point-line matching");  // cannot happen
  }
  std::vector<int> line_of_point(7, -1);
  for (size_t l = 0; l < lines.size(); ++l)
    if (match_line[l] >= 0) line_of_point[match_line[l]] = static_cast<int>(l);

  std::vector<Flag<GFp>> flags;
  for (int p = 0; p < 7; ++p) {
    int code = p + 1;
    const auto& line = lines[line_of_point[p]];
    int second = 0;
    for (int q : line)
      if (q != code) {
        second = q;
        break;
      }
    // complete to a basis of GF(2)^3 with any vector off the line
    int third = 0;
    for (int q = 1; q < 8; ++q) {
      if (q == code || q == second || q == (code ^ second)) continue;
      third = q;
      break;
    }
    flags.push_back(Flag<GFp>{{vec(code), vec(second), vec(third)}});
  }
  return flags;
}

}  // namespace pa
