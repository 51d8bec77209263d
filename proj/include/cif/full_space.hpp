#ifndef CIF_FULL_SPACE_HPP
#define CIF_FULL_SPACE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cif/bigcount.hpp"
#include "cif/family.hpp"
#include "cif/profile.hpp"
#include "cif/search.hpp"

namespace cif {

// Exhaustive search over all non-empty cross-intersecting tuples, not just
// L-initial ones. The family with the most candidate sets is never
// enumerated: it is always taken maximal, as the sets meeting every chosen
// member of the others.

/// Throws CapExceeded unless r = 2 and the smaller of C(n,k_1), C(n,k_2) is
/// at most 20, or r >= 3 and n <= 5.
void check_full_space_caps(const Profile& p);

struct FullSpaceOptions {
  /// Per-family lower bound on |F_i|; empty means 1 everywhere.
  std::vector<std::uint64_t> min_sizes;
  /// Optima kept for canonicalization; beyond this classes are incomplete.
  std::size_t class_cap = 4096;
  /// Upper bound on (optima kept) * n! permutation images.
  std::uint64_t canonical_budget = 40'000'000;
};

/// Optimum value; subtrees are split over OpenMP threads.
BigCount full_space_optimum(const Profile& p, const FullSpaceOptions& opts = {});
/// Same engine on one thread.
BigCount full_space_optimum_serial(const Profile& p, const FullSpaceOptions& opts = {});
/// Literal reference: every subset of every enumerated family, no pruning.
/// For r = 2, every non-empty B with A = max_partner(B). Tiny inputs only.
BigCount full_space_optimum_literal(const Profile& p);

using OptimumVisitor = std::function<void(std::span<const Family>)>;
/// Calls visit for every tuple whose size sum equals target, in a fixed
/// order. Returns the number of such tuples.
std::uint64_t for_each_full_space_optimum(const Profile& p, const BigCount& target, const OptimumVisitor& visit,
                                          const FullSpaceOptions& opts = {});

/// Optimum, sorted size vectors, witnesses and (within caps) canonical
/// classes of every optimum. Compares against the ordered-theorem bound
/// when it applies.
Certificate full_space_max(const Profile& p, const FullSpaceOptions& opts = {});

}  // namespace cif

#endif  // CIF_FULL_SPACE_HPP
