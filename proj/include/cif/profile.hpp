#ifndef CIF_PROFILE_HPP
#define CIF_PROFILE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cif {

/// A problem instance: ground set [n], uniformities k_1..k_r, and for the
/// conditional theorem a distinguished index istar (0-based).
struct Profile {
  int n = 0;
  std::vector<int> ks;
  std::optional<std::size_t> istar;

  [[nodiscard]] std::size_t r() const { return ks.size(); }
  /// r >= 2, every k_i in [1, n], n in [1, kMaxGroundSet]; throws otherwise.
  void validate() const;
  [[nodiscard]] bool descending() const;

  /// Empty when k_1 >= ... >= k_r and n >= k_1 + k_2; otherwise the failed
  /// inequality.
  [[nodiscard]] std::optional<std::string> ordered_hypothesis_failure() const;
  /// Empty when n >= k_i + k_istar for every i != istar.
  [[nodiscard]] std::optional<std::string> conditional_hypothesis_failure(std::size_t istar) const;

  /// min over i != istar of k_i.
  [[nodiscard]] int kbar(std::size_t istar) const;

  /// "n=10 k=5,3,2" plus " istar=3" (1-based) when set.
  [[nodiscard]] std::string text() const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Parses "5,3,2".
std::vector<int> parse_k_list(const std::string& text);
std::string k_list_text(const std::vector<int>& ks);

}  // namespace cif

#endif  // CIF_PROFILE_HPP
