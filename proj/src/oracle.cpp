#include "pa/oracle.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>
#include <thread>

#include "pa/errors.hpp"
#include "pa/problem.hpp"

namespace pa {

namespace {

std::vector<int> pad_one_line(const Permutation& w, int m) {
  std::vector<int> v;
  v.reserve(m);
  for (int i = 1; i <= w.n(); ++i) v.push_back(w(i));
  for (int i = w.n() + 1; i <= m; ++i) v.push_back(i);
  if (static_cast<int>(v.size()) != m)
    throw DimensionMismatch("schubert_polynomial: m smaller than the permutation");
  return v;
}

void add_scaled(Poly& f, const Poly& g, long long s) {
  for (const auto& [e, c] : g) {
    long long& v = f[e];
    v += s * c;
    if (v == 0) f.erase(e);
  }
}

std::mutex memo_mutex;
std::map<int, std::map<std::vector<int>, Poly>> memo;  // by m, then one-line

Poly schubert_of_line(std::vector<int> line, int m) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo[m].find(line);
    if (it != memo[m].end()) return it->second;
  }
  Poly out;
  // first ascent; none means the longest element (the staircase monomial)
  int asc = -1;
  for (int i = 0; i + 1 < m; ++i)
    if (line[i] < line[i + 1]) {
      asc = i;
      break;
    }
  if (asc < 0) {
    std::vector<int> e(m, 0);
    for (int i = 0; i < m - 1; ++i) e[i] = m - 1 - i;
    out[e] = 1;
  } else {
    std::vector<int> longer = line;
    std::swap(longer[asc], longer[asc + 1]);
    out = divided_difference(schubert_of_line(std::move(longer), m), asc + 1);
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[m][line] = out;
  return out;
}

}  // namespace

Poly schubert_polynomial(const Permutation& w, int m) {
  return schubert_of_line(pad_one_line(w, m), m);
}

Poly divided_difference(const Poly& f, int i) {
  Poly out;
  const int a = i - 1, b = i;  // exponent indices of x_i, x_{i+1}
  for (const auto& [e, c] : f) {
    int p = e[a], q = e[b];
    if (p == q) continue;
    long long s = c;
    if (p < q) {
      std::swap(p, q);
      s = -s;
    }
    // (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
    std::vector<int> g = e;
    for (int j = q; j <= p - 1; ++j) {
      g[a] = j;
      g[b] = p + q - 1 - j;
      long long& v = out[g];
      v += s;
      if (v == 0) out.erase(g);
    }
  }
  return out;
}

Poly poly_mul(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [e1, c1] : f)
    for (const auto& [e2, c2] : g) {
      std::vector<int> e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      long long& v = out[e];
      v += c1 * c2;
      if (v == 0) out.erase(e);
    }
  return out;
}

std::map<Permutation, long long> expand_in_basis(Poly f, int m) {
  std::map<Permutation, long long> out;
  while (!f.empty()) {
    auto lead = std::prev(f.end());
    const std::vector<int>& code = lead->first;
    long long c = lead->second;
    // Lehmer code -> permutation: w(i) is the (code_i + 1)-th unused value
    std::vector<int> line;
    std::vector<char> used(m + 1, 0);
    for (int i = 0; i < m; ++i) {
      int want = code[i];
      int count = 0, pick = 0;
      for (int v = 1; v <= m; ++v) {
        if (used[v]) continue;
        if (count++ == want) {
          pick = v;
          break;
        }
      }
      if (pick == 0)
        throw Inconsistent("expand_in_basis: leading monomial is not a code");
      used[pick] = 1;
      line.push_back(pick);
    }
    add_scaled(f, schubert_of_line(line, m), -c);
    if (f.count(code))
      throw Inconsistent("expand_in_basis: leading term did not cancel");
    out[Permutation(std::move(line))] += c;
  }
  return out;
}

std::map<Permutation, long long> structure_constants(const Permutation& u,
                                                     const Permutation& v) {
  const int n = std::max(u.n(), v.n());
  const int m = 2 * n;
  auto full = expand_in_basis(
      poly_mul(schubert_polynomial(u, m), schubert_polynomial(v, m)), m);
  std::map<Permutation, long long> out;
  for (const auto& [w, c] : full) {
    bool small = true;
    for (int i = n + 1; i <= m; ++i)
      if (w(i) != i) {
        small = false;
        break;
      }
    if (!small) continue;
    std::vector<int> line;
    for (int i = 1; i <= n; ++i) line.push_back(w(i));
    out[Permutation(std::move(line))] = c;
  }
  return out;
}

long long structure_constant(const Permutation& u, const Permutation& v,
                             const Permutation& w) {
  if (w.length() != u.length() + v.length()) return 0;
  const int n = std::max({u.n(), v.n(), w.n()});
  auto embed = [n](const Permutation& p) {
    std::vector<int> line;
    for (int i = 1; i <= n; ++i) line.push_back(i <= p.n() ? p(i) : i);
    return Permutation(std::move(line));
  };
  auto cs = structure_constants(embed(u), embed(v));
  auto it = cs.find(embed(w));
  return it == cs.end() ? 0 : it->second;
}

namespace {

using PairKey = std::pair<std::vector<int>, std::vector<int>>;
using PairValue = std::vector<std::pair<std::vector<int>, long long>>;

std::vector<int> line_of(const Permutation& w) {
  std::vector<int> v;
  for (int i = 1; i <= w.n(); ++i) v.push_back(w(i));
  return v;
}

std::map<PairKey, PairValue> load_cache(const std::string& path, int n) {
  std::map<PairKey, PairValue> out;
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) return out;
  auto read_line = [&](std::vector<int>& v) {
    std::vector<unsigned char> buf(n);
    if (std::fread(buf.data(), 1, n, fp) != static_cast<size_t>(n)) return false;
    v.assign(buf.begin(), buf.end());
    return true;
  };
  while (true) {
    PairKey key;
    if (!read_line(key.first) || !read_line(key.second)) break;
    std::uint32_t k = 0;
    if (std::fread(&k, sizeof k, 1, fp) != 1) break;
    PairValue val;
    bool ok = true;
    for (std::uint32_t i = 0; i < k && ok; ++i) {
      std::vector<int> w;
      std::int64_t c = 0;
      ok = read_line(w) && std::fread(&c, sizeof c, 1, fp) == 1;
      if (ok) val.emplace_back(std::move(w), c);
    }
    if (!ok) break;
    out[std::move(key)] = std::move(val);
  }
  std::fclose(fp);
  return out;
}

void append_cache(std::FILE* fp, int n, const PairKey& key,
                  const PairValue& val) {
  auto write_line = [&](const std::vector<int>& v) {
    std::vector<unsigned char> buf(v.begin(), v.end());
    std::fwrite(buf.data(), 1, n, fp);
  };
  write_line(key.first);
  write_line(key.second);
  std::uint32_t k = static_cast<std::uint32_t>(val.size());
  std::fwrite(&k, sizeof k, 1, fp);
  for (const auto& [w, c] : val) {
    write_line(w);
    std::int64_t cc = c;
    std::fwrite(&cc, sizeof cc, 1, fp);
  }
  std::fflush(fp);
}

}  // namespace

ZeroScan zero_scan(int n, const std::string& cache_file, int jobs) {
  const int top = n * (n - 1) / 2;
  auto group = symmetric_group(n);
  std::vector<std::vector<Permutation>> by_length(top + 1);
  for (const auto& w : group) by_length[w.length()].push_back(w);
  Permutation w0 = Permutation::longest(n);

  std::map<PairKey, PairValue> cache;
  std::FILE* cache_fp = nullptr;
  if (!cache_file.empty()) {
    cache = load_cache(cache_file, n);
    cache_fp = std::fopen(cache_file.c_str(), "ab");
    if (!cache_fp) throw Error("zero_scan: cannot open cache file");
  }

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < group.size(); ++i)
    for (size_t j = i; j < group.size(); ++j)
      if (group[i].length() + group[j].length() <= top) pairs.emplace_back(i, j);

  ZeroScan result;
  std::mutex result_mutex;
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (size_t idx = next.fetch_add(1); idx < pairs.size();
         idx = next.fetch_add(1)) {
      const Permutation& u = group[pairs[idx].first];
      const Permutation& v = group[pairs[idx].second];
      const int len = u.length() + v.length();
      const auto& targets = by_length[len];
      if (targets.empty()) continue;

      PairKey key(line_of(u), line_of(v));
      PairValue nonzero;
      bool cached = false;
      {
        std::lock_guard<std::mutex> lock(result_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
          nonzero = it->second;
          cached = true;
        }
      }
      if (!cached) {
        for (const auto& [w, c] : structure_constants(u, v))
          if (c != 0 && w.length() == len) nonzero.emplace_back(line_of(w), c);
        if (cache_fp) {
          std::lock_guard<std::mutex> lock(result_mutex);
          if (!cache.count(key)) {
            append_cache(cache_fp, n, key, nonzero);
            cache[key] = nonzero;
          }
        }
      }

      long long t = 0, z = 0, cgt = 0, uns = 0;
      for (const auto& w : targets) {
        ++t;
        bool is_zero = true;
        for (const auto& [line, c] : nonzero)
          if (line == line_of(w)) {
            is_zero = (c == 0);
            break;
          }
        bool crit =
            vanishing_criterion({n, {u, v, w0.compose(w)}});
        if (is_zero) {
          ++z;
          if (crit) ++cgt;
        } else if (crit) {
          ++uns;
        }
      }
      std::lock_guard<std::mutex> lock(result_mutex);
      result.total += t;
      result.zeros += z;
      result.caught += cgt;
      result.unsound += uns;
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (cache_fp) std::fclose(cache_fp);
  return result;
}

}  // namespace pa
