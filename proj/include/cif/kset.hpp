#ifndef CIF_KSET_HPP
#define CIF_KSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cif {

/// Bit (i-1) stands for element i of the ground set [n].
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask ground_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
/// The initial segment [s] = {1, ..., s}.
inline Mask prefix_mask(int s) { return ground_mask(s); }
inline bool meets(Mask a, Mask b) { return (a & b) != 0; }

/// Lexicographic order on sets of equal size: A precedes B iff the smallest
/// element of the symmetric difference lies in A.
inline bool lex_less(Mask a, Mask b) {
  const Mask d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

/// One k-subset of [n].
struct KSet {
  Mask mask = 0;
  int n = 0;

  [[nodiscard]] int size() const { return popcount(mask); }
  [[nodiscard]] std::vector<int> elements() const;
  friend bool operator==(const KSet&, const KSet&) = default;
};

/// Throws std::invalid_argument if n is outside [1, kMaxGroundSet] or the
/// mask has bits above n.
void validate_kset(const KSet& s);

/// Builds a mask from 1-based elements; throws on elements outside [1, n].
Mask mask_of(int n, const std::vector<int>& elements);

/// 0-based position of s among all |s|-subsets of [n] in lex order.
std::uint64_t lex_rank(const KSet& s);
/// Inverse of lex_rank. Throws std::out_of_range unless idx < C(n, k).
KSet lex_unrank(int n, int k, std::uint64_t idx);

/// All k-subsets of [n] in lex order.
std::vector<Mask> all_ksets(int n, int k);

/// Lex successor among k-subsets of [n]; returns false after the last one.
bool next_kset(int n, Mask& m);

/// "a.b.c" with elements ascending.
std::string set_text(Mask m);

}  // namespace cif

#endif  // CIF_KSET_HPP
