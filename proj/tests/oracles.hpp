// Independent reference computations used only by the tests. Nothing here
// calls into the library's counting or ordering code.
#ifndef CIF_TEST_ORACLES_HPP
#define CIF_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

/// Pascal triangle with 128-bit entries.
inline std::vector<std::vector<unsigned __int128>> pascal(int rows) {
  std::vector<std::vector<unsigned __int128>> t(static_cast<std::size_t>(rows) + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  static const auto t = pascal(64);
  return static_cast<std::uint64_t>(t[n][k]);
}

/// k-subsets of [n] as sorted element vectors, in lexicographic order of
/// the vectors, built by recursive extension.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::uint32_t to_mask(const std::vector<int>& s) {
  std::uint32_t m = 0;
  for (int x : s) m |= std::uint32_t{1} << (x - 1);
  return m;
}

/// Masks of subsets(n, k) in the same order.
inline std::vector<std::uint32_t> lex_masks(int n, int k) {
  std::vector<std::uint32_t> out;
  for (const auto& s : subsets(n, k)) out.push_back(to_mask(s));
  return out;
}

inline bool cross(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (auto x : a) {
    for (auto y : b) {
      if ((x & y) == 0) return false;
    }
  }
  return true;
}

/// Largest m' such that the first m k_i-sets and first m' k_j-sets are
/// cross-intersecting, by testing every prefix pair.
inline std::vector<std::uint64_t> frontier(int n, int ki, int kj) {
  const auto a = lex_masks(n, ki);
  const auto b = lex_masks(n, kj);
  std::vector<std::uint64_t> f(a.size() + 1, 0);
  for (std::size_t m = 0; m <= a.size(); ++m) {
    std::vector<std::uint32_t> pa(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t mp = 0; mp <= b.size(); ++mp) {
      std::vector<std::uint32_t> pb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(mp));
      if (cross(pa, pb)) f[m] = mp;
    }
  }
  return f;
}

/// Maximum of sum |F_i| over non-empty L-initial tuples, scanning the full
/// product of prefix lengths.
inline std::uint64_t prefix_brute(int n, const std::vector<int>& ks) {
  std::vector<std::vector<std::uint32_t>> u;
  for (int k : ks) u.push_back(lex_masks(n, k));
  std::vector<std::size_t> m(ks.size(), 1);
  std::uint64_t best = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < ks.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < ks.size() && ok; ++j) {
        for (std::size_t x = 0; x < m[i] && ok; ++x) {
          for (std::size_t y = 0; y < m[j] && ok; ++y) ok = (u[i][x] & u[j][y]) != 0;
        }
      }
    }
    if (ok) {
      std::uint64_t s = 0;
      for (auto v : m) s += v;
      best = std::max(best, s);
    }
    std::size_t pos = 0;
    while (pos < m.size() && m[pos] == u[pos].size()) m[pos++] = 1;
    if (pos == m.size()) break;
    ++m[pos];
  }
  return best;
}

}  // namespace oracle

#endif  // CIF_TEST_ORACLES_HPP
