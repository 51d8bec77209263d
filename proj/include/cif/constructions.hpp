#ifndef CIF_CONSTRUCTIONS_HPP
#define CIF_CONSTRUCTIONS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cif/bigcount.hpp"
#include "cif/family.hpp"
#include "cif/profile.hpp"

namespace cif {

/// Theorems with a closed-form bound in this library.
enum class TheoremId { T12, T13, T14, T15, T16, T17, T36 };

std::string theorem_name(TheoremId t);                 // "t17"
std::optional<TheoremId> parse_theorem(std::string_view name);  // case-insensitive

/// All l-sets containing S. Requires |S| <= l <= n.
Family star_P(int n, int l, Mask S);
/// All k-sets meeting S. Requires S non-empty.
Family cover_R(int n, int k, Mask S);

/// All l-sets disjoint from at least one member of a; empty for empty a.
Family disjointness_shadow(const Family& a, int l);
/// The largest family of l-sets cross-intersecting with a: every l-set
/// outside the disjointness shadow. Throws if a is empty.
Family max_partner(const Family& a, int l);

/// A tuple of families instantiating one equality case.
struct ExtremalTuple {
  std::vector<Family> fams;
  std::string label;
};

/// One representative per isomorphism class of the equality cases of the
/// ordered theorem (t17) or the conditional theorem (t16, istar required).
/// Representatives use S = [s] so the pieces are L-initial; only tuples
/// whose size sum attains the bound are returned. Parameterized equality
/// cases contribute up to three representatives. Isomorphic duplicates are
/// merged by canonical key when n! times the member count stays below 4e7,
/// otherwise only identical tuples are merged.
std::vector<ExtremalTuple> extremal_candidates(const Profile& p, TheoremId theorem);

/// An intersecting k-uniform family of size C(n-1, k-1) that is not a
/// star, obtained from the point star at 1 by swapping its lex-last member.
/// Exists only for 2 <= k and n <= 2k where such a swap stays intersecting.
std::optional<Family> nonstar_maximum_intersecting(int n, int k);

BigCount size_sum(std::span<const Family> fams);
bool pairwise_cross_intersecting(std::span<const Family> fams);
/// No family can gain an absent set without breaking cross-intersection.
bool is_maximal(std::span<const Family> fams);

}  // namespace cif

#endif  // CIF_CONSTRUCTIONS_HPP
