#ifndef CIF_KERNELS_HPP
#define CIF_KERNELS_HPP

// Data-parallel inner loops. Each kernel has a plain serial reference and an
// OpenMP version with identical output; the tests compare the two and the
// bench target times them.

#include <cstdint>
#include <span>
#include <vector>

#include "cif/kset.hpp"

namespace cif::kernels {

/// Candidates (in their given order) disjoint from at least one member.
std::vector<Mask> shadow_serial(std::span<const Mask> family, std::span<const Mask> candidates);
std::vector<Mask> shadow_parallel(std::span<const Mask> family, std::span<const Mask> candidates);

/// For each row, the index of the first column disjoint from it, or
/// cols.size() when every column meets it.
std::vector<std::uint64_t> first_disjoint_serial(std::span<const Mask> rows, std::span<const Mask> cols);
std::vector<std::uint64_t> first_disjoint_parallel(std::span<const Mask> rows, std::span<const Mask> cols);

/// Exhaustive neighbourhood-expansion sweep over all Q subset of the left
/// side. neighbours[u] is the bitmask of right vertices adjacent to left
/// vertex u. Checks |N(Q)| * left >= right * |Q| for every Q.
struct ExpansionSweep {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Subsets other than the empty set and the full side attaining equality.
  std::uint64_t interior_equalities = 0;
};
ExpansionSweep expansion_sweep_serial(std::span<const std::uint64_t> neighbours, int right_size);
ExpansionSweep expansion_sweep_parallel(std::span<const std::uint64_t> neighbours, int right_size);

/// Independence number by scanning all 2^|V| vertex subsets. adjacency[v] is
/// the neighbour mask of v; |V| <= 26.
int independence_brute_serial(std::span<const std::uint32_t> adjacency);
int independence_brute_parallel(std::span<const std::uint32_t> adjacency);

/// Scan of every family of `size` members drawn from `universe` (all k-sets)
/// measuring its disjointness shadow among `targets` (all l-sets). Branches
/// whose partial shadow already exceeds `threshold` are cut, since shadows
/// only grow; every family with shadow <= threshold is visited.
struct ShadowScan {
  std::uint64_t below = 0;          ///< families with |D| < threshold
  std::uint64_t equal = 0;          ///< families with |D| == threshold
  std::uint64_t equal_non_star = 0; ///< of those, members share fewer than s common elements
  std::uint64_t visited = 0;        ///< search nodes
};
ShadowScan shadow_scan_serial(int n, int k, int l, int size, int s, std::uint64_t threshold);
ShadowScan shadow_scan_parallel(int n, int k, int l, int size, int s, std::uint64_t threshold);

}  // namespace cif::kernels

#endif  // CIF_KERNELS_HPP
