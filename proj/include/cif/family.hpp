#ifndef CIF_FAMILY_HPP
#define CIF_FAMILY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cif/kset.hpp"

namespace cif {

/// A k-uniform family over [n]: members are stored lex-ascending without
/// duplicates. Immutable after construction.
class Family {
 public:
  Family() = default;
  /// Sorts and deduplicates; throws if a member has the wrong size or lies
  /// outside [n].
  Family(int n, int k, std::vector<Mask> members);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] std::span<const Mask> members() const { return members_; }
  [[nodiscard]] bool contains(Mask m) const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  struct Trusted {};
  Family(Trusted, int n, int k, std::vector<Mask> members)
      : n_(n), k_(k), members_(std::move(members)) {}
  friend Family lex_initial(int n, int k, std::uint64_t m);

  int n_ = 0;
  int k_ = 0;
  std::vector<Mask> members_;
};

/// The first m k-subsets of [n] in lex order.
Family lex_initial(int n, int k, std::uint64_t m);
bool is_L_initial(const Family& f);

/// Vacuously true when either side is empty. Throws on ground-set mismatch.
bool is_cross_intersecting(const Family& a, const Family& b);
bool is_intersecting(const Family& a);
/// Member-wise complement in [n]; uniformity becomes n - k.
Family complement_family(const Family& a);

/// Text form: `n=<n> k=<k> {a.b.c, d.e.f}`.
std::string to_text(const Family& f);
/// Parses the text form; throws ParseError on malformed input.
Family parse_family(std::string_view text);

}  // namespace cif

#endif  // CIF_FAMILY_HPP
