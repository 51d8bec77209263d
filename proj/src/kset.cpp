#include "cif/kset.hpp"

#include <stdexcept>

#include "cif/bigcount.hpp"
#include "cif/error.hpp"

namespace cif {

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  for (Mask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

void validate_kset(const KSet& s) {
  if (s.n < 1 || s.n > kMaxGroundSet) {
    throw CapExceeded("ground set size " + std::to_string(s.n) + " outside [1, " +
                      std::to_string(kMaxGroundSet) + "]");
  }
  if ((s.mask & ~ground_mask(s.n)) != 0) {
    throw std::invalid_argument("set has elements above n=" + std::to_string(s.n));
  }
}

Mask mask_of(int n, const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("element " + std::to_string(e) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::uint64_t lex_rank(const KSet& s) {
  validate_kset(s);
  const int k = s.size();
  std::uint64_t rank = 0;
  int prev = 0;
  int j = 0;
  for (int c : s.elements()) {
    ++j;
    // Every set agreeing on the first j-1 elements whose j-th element is x < c
    // comes earlier; there are C(n - x, k - j) of them.
    for (int x = prev + 1; x < c; ++x) rank += binom(s.n - x, k - j).to_u64();
    prev = c;
  }
  return rank;
}

KSet lex_unrank(int n, int k, std::uint64_t idx) {
  if (n < 1 || n > kMaxGroundSet) throw CapExceeded("ground set size out of range");
  if (k < 0 || k > n) throw std::out_of_range("k outside [0, n]");
  const std::uint64_t total = binom(n, k).to_u64();
  if (idx >= total) throw std::out_of_range("lex index out of range");
  Mask m = 0;
  int x = 1;
  for (int j = 1; j <= k; ++j) {
    for (;; ++x) {
      const std::uint64_t block = binom(n - x, k - j).to_u64();
      if (idx < block) break;
      idx -= block;
    }
    m |= Mask{1} << (x - 1);
    ++x;
  }
  return KSet{m, n};
}

bool next_kset(int n, Mask& m) {
  const int k = popcount(m);
  if (k == 0) return false;
  // Find the largest position i (1-based) holding an element that can move
  // right: element e at slot j may increase while e < n - (k - j).
  std::vector<int> el;
  for (Mask t = m; t != 0; t &= t - 1) el.push_back(std::countr_zero(t) + 1);
  int j = k - 1;
  while (j >= 0 && el[static_cast<std::size_t>(j)] == n - (k - 1 - j)) --j;
  if (j < 0) return false;
  int v = el[static_cast<std::size_t>(j)] + 1;
  for (int t = j; t < k; ++t) el[static_cast<std::size_t>(t)] = v++;
  m = 0;
  for (int e : el) m |= Mask{1} << (e - 1);
  return true;
}

std::vector<Mask> all_ksets(int n, int k) {
  if (n < 0 || n > kMaxGroundSet) throw CapExceeded("ground set size out of range");
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  out.reserve(binom(n, k).to_u64());
  Mask m = prefix_mask(k);
  do {
    out.push_back(m);
  } while (next_kset(n, m));
  return out;
}

std::string set_text(Mask m) {
  std::string out;
  for (Mask t = m; t != 0; t &= t - 1) {
    if (!out.empty()) out.push_back('.');
    out += std::to_string(std::countr_zero(t) + 1);
  }
  return out;
}

}  // namespace cif
