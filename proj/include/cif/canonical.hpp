#ifndef CIF_CANONICAL_HPP
#define CIF_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cif/family.hpp"

namespace cif {

/// Isomorphism-invariant key of an ordered tuple of families over a common
/// ground set. Serialization: n, then for each family in tuple order its k,
/// its size and the permuted member masks sorted ascending as integers. The
/// key is the lexicographically smallest serialization over all n!
/// relabelings of [n].
struct CanonicalKey {
  std::vector<std::uint32_t> words;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  /// The minimal image written in family text form, joined by " | ".
  [[nodiscard]] std::string to_text() const;
};

/// Throws CapExceeded for n above kMaxCanonicalN and std::invalid_argument
/// if the families disagree on n or the tuple is empty.
CanonicalKey canonical_form(std::span<const Family> fams);

/// Applies the relabeling x -> perm[x-1] (1-based targets) to every member.
std::vector<Family> permute_families(std::span<const Family> fams, std::span<const int> perm);

}  // namespace cif

#endif  // CIF_CANONICAL_HPP
