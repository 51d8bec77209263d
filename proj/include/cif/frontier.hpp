#ifndef CIF_FRONTIER_HPP
#define CIF_FRONTIER_HPP

#include <cstdint>
#include <vector>

namespace cif {

/// For prefixes of the lex orders on k_i-sets and k_j-sets: f[m] is the
/// largest m' such that the first m k_i-sets and the first m' k_j-sets are
/// cross-intersecting, for 0 <= m <= C(n, k_i). Non-increasing, f[0] = C(n, k_j).
struct FrontierTable {
  int n = 0;
  int k_i = 0;
  int k_j = 0;
  std::vector<std::uint64_t> f;

  /// Compatibility of a prefix pair; prefixes are nested so the compatible
  /// region is downward closed.
  [[nodiscard]] bool compatible(std::uint64_t m, std::uint64_t m_other) const { return m_other <= f[m]; }
};

/// Direct pairwise check, sweeping m upward while the partner pointer only
/// shrinks. Requires 1 <= k_i, k_j <= n <= kMaxSearchN.
FrontierTable frontier_table(int n, int k_i, int k_j);
/// Same table from the OpenMP first-disjoint kernel followed by a prefix min.
FrontierTable frontier_table_parallel(int n, int k_i, int k_j);

/// Table derived from the rule "two L-initial families are cross-intersecting
/// iff their lex-last members meet". Not proven here; only use it after
/// last_member_rule_agrees has confirmed it for the parameters at hand.
FrontierTable frontier_table_last_member(int n, int k_i, int k_j);
/// Compares the last-member table with the direct one for every
/// 1 <= k_i, k_j <= n <= n_max.
bool last_member_rule_agrees(int n_max);

}  // namespace cif

#endif  // CIF_FRONTIER_HPP
