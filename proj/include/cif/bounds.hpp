#ifndef CIF_BOUNDS_HPP
#define CIF_BOUNDS_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cif/bigcount.hpp"

namespace cif {

/// Which argument of a two-way max attained the value. Ties are reported as
/// such because the equality cases differ by argument.
enum class Branch { CoverStar, AllStars, FullFamily, Tie };
std::string branch_name(Branch b);

struct BoundResult {
  BigCount value;
  Branch branch = Branch::Tie;
  BigCount first;   ///< cover/star argument (whole family for the Hilton bound)
  BigCount second;  ///< all-stars argument
  /// The transversal sizes s whose R_s / P_s construction attains the value.
  std::vector<int> optimal_s;
};

/// g(s) = C(n,k_1) - C(n-s,k_1) + sum_{i>=2} C(n-s, k_i-s).
/// Requires 1 <= s <= min(k_2..k_r), s <= n and n >= k_1.
BigCount g_eval(int n, std::span<const int> ks, int s);

struct EndpointArgmax {
  std::vector<int> s_star;  ///< all s in [1, k_r] attaining the maximum
  BigCount value;
  bool endpoint_only = true;  ///< every maximizer is 1 or k_r
};
/// Full scan of g over [1, k_r]. Requires k_r = min(k_2..k_r),
/// n >= k_1 + k_i for 2 <= i <= r-1 and n > k_1 + k_r.
EndpointArgmax g_endpoint_argmax(int n, std::span<const int> ks);

/// Requires k_1 >= ... >= k_r >= 1 and n >= k_1 + k_2.
BoundResult bound_thm17(int n, std::span<const int> ks);
/// istar is 0-based. Requires n >= k_i + k_istar for every i != istar.
BoundResult bound_thm16(int n, std::span<const int> ks, std::size_t istar);
/// C(n,k) - C(n-k,k) + 1; requires n >= 2k.
BigCount bound_hm(int n, int k);

struct FtBound {
  BigCount value;
  /// Only meaningful for the second part: both expressions agree (k = l,
  /// n = 2k), so no label is chosen between them.
  bool branches_coincide = false;
};
/// Two non-empty families of k-sets and l-sets, k >= l, n >= k + l. With
/// second_part set, the bound under |F_2| >= C(n-1, l-1).
FtBound bound_ft(int n, int k, int l, bool second_part);

/// max{C(n,k) - C(n-k,k) + r - 1, r C(n-1,k-1)}; requires n >= 2k, r >= 2.
BoundResult bound_sfq15(int n, int k, int r);
/// Families allowed empty: max{C(n,k), r C(n-1,k-1)}; requires n >= 2k, r >= 2.
BoundResult bound_hilton(int n, int k, int r);

/// |A| + c|B| bound for C(n-tau, l-tau) <= |B| <= C(n-1, l-1).
/// Requires n >= k + l, l >= tau >= 1, c >= 1. optimal_s holds 1 and/or tau.
BoundResult weighted_bound(int n, int k, int l, int tau, const BigCount& c);

/// Both telescoping identities at (n, k, s); requires n, k, s >= 1, s <= n.
bool lemma24_check(int n, int k, int s);

struct Lemma25Result {
  std::strong_ordering ordering = std::strong_ordering::equal;  ///< all-stars sum vs cover sum
  bool equality_predicted = false;      ///< r == 2 and n == k_1 + k_2
  bool equality_condition_holds = false;  ///< (ordering == equal) == equality_predicted
};
/// Requires n >= k_i + k_j for all i < j, k_1 > k_2, and min_{i != 2} k_i > 1.
Lemma25Result lemma25_compare(int n, std::span<const int> ks);

/// Sum of C(n-1, k_i-1).
BigCount all_stars_sum(int n, std::span<const int> ks);

}  // namespace cif

#endif  // CIF_BOUNDS_HPP
