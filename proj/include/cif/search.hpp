#ifndef CIF_SEARCH_HPP
#define CIF_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cif/bigcount.hpp"
#include "cif/canonical.hpp"
#include "cif/family.hpp"
#include "cif/profile.hpp"

namespace cif {

/// Outcome of a search.
struct Certificate {
  Profile profile;
  BigCount optimum;
  /// Sorted lexicographically, in the profile's coordinate order.
  std::vector<std::vector<std::uint64_t>> optimal_size_vectors;
  /// Witness tuples for the leading size vectors (or leading optima).
  std::vector<std::vector<Family>> witnesses;
  /// Canonical keys of all optima, sorted; empty unless computed.
  std::vector<CanonicalKey> extremal_classes;
  /// extremal_classes covers every optimum.
  bool classes_complete = false;
  /// The bound compared against, if one applies.
  std::optional<BigCount> bound;
  std::string bound_theorem;
  /// optimum == bound, plus any structural checks the producer performs.
  bool bound_agreement = false;
  std::string engine;
  /// Number of optimal tuples (full engine) or optimal size vectors (prefix engine).
  std::uint64_t optima_count = 0;
  /// Free-form notes from the producer, one per line.
  std::vector<std::string> notes;
};

struct SearchOptions {
  /// Per-coordinate lower bound on m_i; empty means 1 everywhere.
  std::vector<std::uint64_t> min_sizes;
  std::size_t max_witnesses = 16;
  /// Build tables through the last-member rule. Only honoured after the
  /// rule has been validated against the direct check up to n = 12.
  bool use_last_member = false;
};

/// Maximum of sum m_i over L-initial tuples with m_i >= min_sizes[i] that
/// are pairwise cross-intersecting. Attaches the ordered-theorem bound when
/// the sorted profile satisfies its hypothesis, and the conditional bound
/// when the profile carries istar and its m_istar lower bound is
/// C(n-1, k_istar - 1). Throws HypothesisError if no point is feasible.
Certificate max_sum_L_initial(const Profile& p, const SearchOptions& opts = {});

/// Same with m_istar >= C(n-1, k_istar - 1); p.istar must be set.
Certificate max_sum_L_initial_conditional(const Profile& p);

/// Maximum of |A| + c|B| over L-initial pairs of k-sets A (possibly empty)
/// and l-sets B with C(n-tau, l-tau) <= |B| <= C(n-1, l-1). Compared with
/// weighted_bound.
Certificate max_weighted_pair(int n, int k, int l, const BigCount& c, int tau);

}  // namespace cif

#endif  // CIF_SEARCH_HPP
