#ifndef CIF_BIGCOUNT_HPP
#define CIF_BIGCOUNT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cif {

/// Exact non-negative integer with 128-bit range. Every arithmetic operation
/// is checked: overflow and negative results throw std::overflow_error,
/// division by zero throws std::domain_error.
class BigCount {
 public:
  using Rep = unsigned __int128;

  constexpr BigCount() = default;
  constexpr BigCount(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by intent

  static BigCount from_rep(Rep v) {
    BigCount b;
    b.v_ = v;
    return b;
  }
  static BigCount parse(std::string_view text);

  [[nodiscard]] Rep rep() const { return v_; }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::uint64_t to_u64() const;
  [[nodiscard]] std::string to_string() const;

  BigCount& operator+=(const BigCount& o);
  BigCount& operator-=(const BigCount& o);
  BigCount& operator*=(const BigCount& o);
  BigCount& operator/=(const BigCount& o);

  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend BigCount operator/(BigCount a, const BigCount& b) { return a /= b; }

  friend bool operator==(const BigCount&, const BigCount&) = default;
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return a.v_ <=> b.v_;
  }

 private:
  Rep v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BigCount& b);

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
BigCount binom(int n, int k);

}  // namespace cif

#endif  // CIF_BIGCOUNT_HPP
